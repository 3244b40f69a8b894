#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unasp/revision.hpp"

namespace unasp {

enum class PostulateStatus {
  Holds,
  HoldsModified,     // holds up to weight adjustments
  Violated,
  PreconditionUnmet  // the postulate's premise does not apply
};

std::string to_string(PostulateStatus s);

struct PostulateReport {
  std::string postulate;
  PostulateStatus status = PostulateStatus::Holds;
  std::string detail;
  bool sampled = false;  // premise space sampled rather than exhausted
};

// Premises quantify over sub-bases; up to this many rules the subsets are
// enumerated exhaustively, beyond it they are sampled.
inline constexpr std::size_t kExhaustiveRuleLimit = 12;
inline constexpr int kPremiseSamples = 1000;

// Every incoming rule survives into the revision (weights may be hedged).
PostulateReport check_success(const Program& base, const Program& incoming,
                              const RevisionConfig& cfg = {});

// The revision never invents rules: everything is already in the union.
PostulateReport check_inclusion(const Program& base, const Program& incoming,
                                const RevisionConfig& cfg = {});

// If any sub-base joins the incoming program consistently, the revision
// must come out consistent.
PostulateReport check_nm_consistency(const Program& base, const Program& incoming,
                                     const RevisionConfig& cfg = {},
                                     std::uint64_t seed = 0);

// Removals are tight: putting any removed rule back breaks consistency.
PostulateReport check_fullness(const Program& base, const Program& incoming,
                               const RevisionConfig& cfg = {});

// Two incoming programs that conflict with exactly the same sub-bases
// remove the same rules.
PostulateReport check_uniformity(const Program& base, const Program& incoming,
                                 const Program& alternative, const RevisionConfig& cfg = {},
                                 std::uint64_t seed = 0);

// Revising a two-block base matches revising the blocks separately.
PostulateReport check_weak_disjunction(const Program& block1, const Program& block2,
                                       const Program& incoming,
                                       const RevisionConfig& cfg = {});

// Revising by a two-block incoming program matches revising the parts of
// the base each block can reach, separately.
PostulateReport check_weak_parallelism(const Program& base, const Program& incoming1,
                                       const Program& incoming2,
                                       const RevisionConfig& cfg = {});

// Copy of p with every atom unknown to reference renamed by the suffix.
Program rename_private_atoms(const Program& p, const Program& reference,
                             const std::string& suffix = "_alt");

// Splits a program into two halves along connected components of the
// atom-sharing graph; a single component leaves the second half empty.
std::pair<Program, Program> split_by_components(const Program& p);

// Runs every checker, deriving block splits from connected components and,
// when no alternative program is supplied, a renamed incoming program for
// the uniformity premise.
std::vector<PostulateReport> check_all(const Program& base, const Program& incoming,
                                       const std::optional<Program>& alternative,
                                       const RevisionConfig& cfg = {},
                                       std::uint64_t seed = 0);

}  // namespace unasp
