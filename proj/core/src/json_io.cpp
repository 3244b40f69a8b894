#include "unasp/json_io.hpp"

#include "json.hpp"

namespace unasp {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json interval_json(TruthInterval v) { return ordered_json::array({v.lo, v.hi}); }

ordered_json node_json(const DerivationNode& n) {
  ordered_json j;
  j["literal"] = literal_key(n.lit);
  if (n.equation) {
    j["expr"] = to_string(n.equation->expr);
  } else {
    j["expr"] = nullptr;
  }
  if (n.revisit) j["revisit"] = true;
  ordered_json children = ordered_json::array();
  for (const auto& c : n.children) children.push_back(node_json(c));
  j["children"] = std::move(children);
  return j;
}

}  // namespace

std::string answer_set_json(const AnswerSet& as, int indent) {
  ordered_json j;
  j["consistent"] = as.consistent;
  ordered_json values = ordered_json::object();
  for (const auto& [lit, v] : as.values.values()) {
    values[literal_key(lit)] = interval_json(v);
  }
  j["values"] = std::move(values);
  j["contradictions"] = as.contradiction_atoms;
  return j.dump(indent);
}

std::string revision_report_json(const RevisionOutcome& o, int indent) {
  ordered_json j;
  j["removed"] = o.removed.rules;
  j["contradiction_set"] = o.contradiction_atoms;
  ordered_json prs = ordered_json::object();
  for (const auto& [atom, sets] : o.candidates) {
    ordered_json lists = ordered_json::array();
    for (const auto& s : sets) lists.push_back(s);
    prs[atom] = std::move(lists);
  }
  j["prs"] = std::move(prs);
  j["distance"] = o.removed.distance;
  j["program"] = to_string(o.result);
  return j.dump(indent);
}

std::string derivation_json(const Derivation& d, int indent) {
  return node_json(d.root).dump(indent);
}

std::string postulate_reports_json(const std::vector<PostulateReport>& reports, int indent) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json j;
    j["postulate"] = r.postulate;
    j["status"] = to_string(r.status);
    j["detail"] = r.detail;
    j["sampled"] = r.sampled;
    arr.push_back(std::move(j));
  }
  return arr.dump(indent);
}

}  // namespace unasp
