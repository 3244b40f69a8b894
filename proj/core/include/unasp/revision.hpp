#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "unasp/solver.hpp"
#include "unasp/syntax.hpp"

namespace unasp {

class RevisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No removal of base rules clears the named contradiction atom.
class NoRemovalCandidatesError : public RevisionError {
 public:
  explicit NoRemovalCandidatesError(const std::string& atom)
      : RevisionError("no rule removal clears the contradiction on '" + atom + "'"),
        atom_(atom) {}
  const std::string& atom() const { return atom_; }

 private:
  std::string atom_;
};

struct RevisionConfig {
  double delta = 0.1;  // weight widening per exception
  DistanceVariant distance = DistanceVariant::EndpointMean;
  int max_candidate_size = 3;     // per-atom removal candidate cardinality cap
  long max_combinations = 100000; // safety cap for joint enumeration
  SolveOptions solve;
};

struct DispositionLink {
  std::string rule;                  // uncertain rule whose weight is widened
  std::set<std::string> exceptions;  // complementary-head rules in the other program
};

// Widens w by delta per exception, clamped to [0,1].
TruthInterval update_weight(TruthInterval w, int exception_count, double delta);

// Pairs every uncertain rule (weight of nonzero width) with the rules of
// the other program whose head is the complement of its own, in both
// directions. Ids refer to the combined program.
std::vector<DispositionLink> disposition_links(const Program& base, const Program& incoming);

// Concatenation of the two programs. The incoming program keeps its rule
// labels; colliding base labels get a "_P" suffix. Weights of linked
// uncertain rules are widened by delta per exception.
Program modified_union(const Program& base, const Program& incoming,
                       const RevisionConfig& cfg = {});

// Atoms known to both programs whose value in the combined answer set is
// irregular: the conflicts that removal from the base can repair.
std::set<std::string> contradiction_set(const Program& base, const Program& incoming,
                                        const RevisionConfig& cfg = {});

// Per contradiction atom, the inclusion-minimal sets of base rules (up to
// cfg.max_candidate_size many) whose removal clears that atom. Candidates
// are drawn from the base rules in the atom's derivation. Throws
// NoRemovalCandidatesError when an atom has no curing candidate.
std::map<std::string, std::vector<std::set<std::string>>> removal_candidates(
    const Program& base, const Program& incoming, const RevisionConfig& cfg = {});

// Sum of the per-atom interval distances, taken on positive literals.
double interpretation_distance(const Interpretation& a, const Interpretation& b,
                               const std::set<Atom>& atoms,
                               DistanceVariant variant = DistanceVariant::EndpointMean);

// Largest pairwise interpretation distance between the two collections;
// 0 when both are empty, the atom count when exactly one is empty.
double answer_set_distance(const std::vector<Interpretation>& a,
                           const std::vector<Interpretation>& b,
                           const std::set<Atom>& atoms,
                           DistanceVariant variant = DistanceVariant::EndpointMean);

struct RemovedSet {
  std::set<std::string> rules;
  // rule id -> selection step: 1 unique weakest in its own pool, 2 shared
  // weakest across overlapping pools, 3 tie broken by answer set distance.
  std::map<std::string, int> strategy_step;
  // answer set gap between the base and the pruned base
  double distance = 0.0;
};

// Picks one curing candidate per contradiction atom, preferring the rule
// with the least knowledge (widest weight), merging overlapping pools, and
// breaking remaining ties by staying closest to the base answer set, then
// by label order. The assembled set is verified against the full combined
// program and pruned to inclusion-minimality.
RemovedSet choose_removed_set(
    const Program& base, const Program& incoming,
    const std::map<std::string, std::vector<std::set<std::string>>>& candidates,
    const RevisionConfig& cfg = {});

struct RevisionOutcome {
  Program result;        // modified union of the pruned base and the incoming program
  AnswerSet answer_set;  // answer set of the result
  std::set<std::string> contradiction_atoms;
  std::map<std::string, std::vector<std::set<std::string>>> candidates;
  RemovedSet removed;
};

// Removed-set revision: accepts the incoming program wholesale and removes
// a minimal set of base rules so the modified union becomes consistent.
RevisionOutcome revise(const Program& base, const Program& incoming,
                       const RevisionConfig& cfg = {});

}  // namespace unasp
