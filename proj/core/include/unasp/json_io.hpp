#pragma once

#include <string>
#include <vector>

#include "unasp/postulates.hpp"
#include "unasp/revision.hpp"
#include "unasp/solver.hpp"
#include "unasp/transform.hpp"

namespace unasp {

// Deterministic renderings: keys appear in a fixed order, containers are
// sorted, and numbers use the shortest round-tripping decimal form, so the
// same input yields byte-identical output on every run.

// {"consistent": ..., "values": {"p": [lo,hi], ...}, "contradictions": [...]}
std::string answer_set_json(const AnswerSet& as, int indent = 2);

// {"removed": [...], "contradiction_set": [...], "prs": {...},
//  "distance": ..., "program": "..."}
std::string revision_report_json(const RevisionOutcome& o, int indent = 2);

// Nested {"literal": ..., "expr": ..., "children": [...]} nodes; revisited
// literals carry "revisit": true.
std::string derivation_json(const Derivation& d, int indent = 2);

// Array of {"postulate": ..., "status": ..., "detail": ..., "sampled": ...}
std::string postulate_reports_json(const std::vector<PostulateReport>& reports,
                                   int indent = 2);

}  // namespace unasp
