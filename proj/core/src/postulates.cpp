#include "unasp/postulates.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "unasp/generator.hpp"

namespace unasp {

std::string to_string(PostulateStatus s) {
  switch (s) {
    case PostulateStatus::Holds:
      return "holds";
    case PostulateStatus::HoldsModified:
      return "holds-modified";
    case PostulateStatus::Violated:
      return "violated";
    case PostulateStatus::PreconditionUnmet:
      return "precondition-unmet";
  }
  return "?";
}

namespace {

std::optional<RevisionOutcome> try_revise(const Program& base, const Program& incoming,
                                          const RevisionConfig& cfg, std::string* why) {
  try {
    return revise(base, incoming, cfg);
  } catch (const RevisionError& e) {
    if (why) *why = e.what();
    return std::nullopt;
  }
}

bool union_consistent(const Program& base, const Program& incoming,
                      const RevisionConfig& cfg) {
  try {
    return answer_sets(modified_union(base, incoming, cfg), cfg.solve).consistent;
  } catch (const SolveError&) {
    return false;
  }
}

std::string join(const std::set<std::string>& items) {
  std::string out = "{";
  bool first = true;
  for (const auto& s : items) {
    if (!first) out += ", ";
    out += s;
    first = false;
  }
  return out + "}";
}

// Visits subsets of ids as bitmasks, the empty set first; the visitor
// returns false to stop early. Only valid for ids.size() <= 20 or so.
template <typename F>
void scan_subsets(const std::vector<std::string>& ids, F&& visit) {
  std::uint64_t total = std::uint64_t{1} << ids.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::set<std::string> s;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (mask & (std::uint64_t{1} << i)) s.insert(ids[i]);
    }
    if (!visit(s)) return;
  }
}

std::set<std::string> random_subset(const std::vector<std::string>& ids, Rng& rng) {
  std::set<std::string> s;
  for (const auto& id : ids) {
    if (unit_draw(rng) < 0.5) s.insert(id);
  }
  return s;
}

bool rule_matches(const Rule& a, const Rule& b, double eps) {
  return a.head == b.head && a.body == b.body && approx_equal(a.weight, b.weight, eps);
}

Program concat(const Program& a, const Program& b) {
  Program out;
  for (const auto& r : a.rules()) out.add(r);
  for (const auto& r : b.rules()) out.add(r);
  return out;
}

std::set<std::string> rule_atom_keys(const Rule& r) {
  std::set<std::string> out{atom_key(r.head.atom)};
  for (const auto& e : r.body) {
    if (e.kind != ElementKind::Constant) out.insert(atom_key(e.lit.atom));
  }
  return out;
}

std::set<std::string> program_atom_keys(const Program& p) {
  std::set<std::string> out;
  for (const auto& a : p.atom_base()) out.insert(atom_key(a));
  return out;
}

// Combines two revision results; reports whether the shared rules disagree.
std::map<std::string, const Rule*> merge_results(const Program& a, const Program& b,
                                                 double eps, bool* coupling) {
  std::map<std::string, const Rule*> merged;
  for (const auto& r : a.rules()) merged[r.id] = &r;
  for (const auto& r : b.rules()) {
    auto it = merged.find(r.id);
    if (it == merged.end()) {
      merged[r.id] = &r;
    } else if (!rule_matches(*it->second, r, eps)) {
      *coupling = true;
    }
  }
  return merged;
}

// Union-find root per rule; rules are joined when they share an atom.
std::vector<int> component_roots(const Program& p) {
  int n = static_cast<int>(p.size());
  std::vector<std::set<std::string>> atoms;
  atoms.reserve(n);
  for (const auto& r : p.rules()) atoms.push_back(rule_atom_keys(r));

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bool overlap = false;
      for (const auto& k : atoms[i]) {
        if (atoms[j].count(k)) {
          overlap = true;
          break;
        }
      }
      if (overlap) parent[find(i)] = find(j);
    }
  }
  std::vector<int> roots(n);
  for (int i = 0; i < n; ++i) roots[i] = find(i);
  return roots;
}

bool result_equals_merged(const Program& whole,
                          const std::map<std::string, const Rule*>& merged, double eps) {
  if (whole.size() != merged.size()) return false;
  for (const auto& r : whole.rules()) {
    auto it = merged.find(r.id);
    if (it == merged.end() || !rule_matches(r, *it->second, eps)) return false;
  }
  return true;
}

// Shared skeleton of the two decomposition checks: the whole revision must
// match the two part revisions, exactly or at least in what was removed.
PostulateReport compare_decomposition(const std::string& name,
                                      const std::optional<RevisionOutcome>& whole,
                                      const std::optional<RevisionOutcome>& part1,
                                      const std::optional<RevisionOutcome>& part2,
                                      const std::string& why, double eps) {
  PostulateReport rep{name};
  if (!whole || !part1 || !part2) {
    rep.status = PostulateStatus::PreconditionUnmet;
    rep.detail = "revision failed: " + why;
    return rep;
  }
  bool coupling = false;
  auto merged = merge_results(part1->result, part2->result, eps, &coupling);
  if (!coupling && result_equals_merged(whole->result, merged, eps)) {
    rep.status = PostulateStatus::Holds;
    return rep;
  }
  std::set<std::string> removed_parts = part1->removed.rules;
  removed_parts.insert(part2->removed.rules.begin(), part2->removed.rules.end());
  if (whole->removed.rules == removed_parts) {
    rep.status = PostulateStatus::HoldsModified;
    rep.detail = "weights couple across the split; removed sets match";
    return rep;
  }
  rep.status = PostulateStatus::Violated;
  rep.detail = "removed " + join(whole->removed.rules) + " as a whole but " +
               join(removed_parts) + " in parts";
  return rep;
}

}  // namespace

PostulateReport check_success(const Program& base, const Program& incoming,
                              const RevisionConfig& cfg) {
  PostulateReport rep{"success"};
  std::string why;
  auto r = try_revise(base, incoming, cfg, &why);
  if (!r) {
    rep.status = PostulateStatus::PreconditionUnmet;
    rep.detail = "revision failed: " + why;
    return rep;
  }
  bool modified = false;
  for (const auto& q : incoming.rules()) {
    const Rule* f = r->result.find(q.id);
    if (!f || f->head != q.head || f->body != q.body) {
      rep.status = PostulateStatus::Violated;
      rep.detail = "incoming rule " + q.id + " missing or reshaped";
      return rep;
    }
    if (!approx_equal(f->weight, q.weight, cfg.solve.eps)) modified = true;
  }
  rep.status = modified ? PostulateStatus::HoldsModified : PostulateStatus::Holds;
  if (modified) rep.detail = "incoming rules kept with hedged weights";
  return rep;
}

PostulateReport check_inclusion(const Program& base, const Program& incoming,
                                const RevisionConfig& cfg) {
  PostulateReport rep{"inclusion"};
  std::string why;
  auto r = try_revise(base, incoming, cfg, &why);
  if (!r) {
    rep.status = PostulateStatus::PreconditionUnmet;
    rep.detail = "revision failed: " + why;
    return rep;
  }
  Program u = modified_union(base, incoming, cfg);
  bool modified = false;
  for (const auto& rule : r->result.rules()) {
    const Rule* f = u.find(rule.id);
    if (!f || f->head != rule.head || f->body != rule.body) {
      rep.status = PostulateStatus::Violated;
      rep.detail = "result rule " + rule.id + " is not part of the union";
      return rep;
    }
    if (!approx_equal(f->weight, rule.weight, cfg.solve.eps)) modified = true;
  }
  rep.status = modified ? PostulateStatus::HoldsModified : PostulateStatus::Holds;
  if (modified) rep.detail = "weights re-hedged after removal";
  return rep;
}

PostulateReport check_nm_consistency(const Program& base, const Program& incoming,
                                     const RevisionConfig& cfg, std::uint64_t seed) {
  PostulateReport rep{"nm-consistency"};
  // The operator revises a consistent base; conflicts internal to the base
  // are not on atoms it may repair.
  if (!union_consistent(base, Program{}, cfg)) {
    rep.status = PostulateStatus::PreconditionUnmet;
    rep.detail = "the base alone is inconsistent";
    return rep;
  }
  // Removal repairs contradictions on the shared atoms; a combined program
  // with no answer set at all, or one whose conflicts fall outside the
  // vocabulary both programs know, is outside the operator's reach.
  try {
    AnswerSet u = answer_sets(modified_union(base, incoming, cfg), cfg.solve);
    std::set<std::string> base_atoms = program_atom_keys(base);
    std::set<std::string> incoming_atoms = program_atom_keys(incoming);
    for (const auto& k : u.contradiction_atoms) {
      if (!base_atoms.count(k) || !incoming_atoms.count(k)) {
        rep.status = PostulateStatus::PreconditionUnmet;
        rep.detail = "the conflict on " + k + " lies outside the shared atoms";
        return rep;
      }
    }
  } catch (const SolveError&) {
    rep.status = PostulateStatus::PreconditionUnmet;
    rep.detail = "the combined program has no answer set";
    return rep;
  }
  std::vector<std::string> ids;
  for (const auto& r : base.rules()) ids.push_back(r.id);

  bool premise = false;
  if (base.size() + incoming.size() <= kExhaustiveRuleLimit) {
    scan_subsets(ids, [&](const std::set<std::string>& s) {
      if (union_consistent(base.restricted_to(s), incoming, cfg)) premise = true;
      return !premise;
    });
  } else {
    rep.sampled = true;
    premise = union_consistent(base.restricted_to({}), incoming, cfg);
    Rng rng(seed);
    for (int i = 0; i < kPremiseSamples && !premise; ++i) {
      premise = union_consistent(base.restricted_to(random_subset(ids, rng)), incoming, cfg);
    }
  }
  if (!premise) {
    rep.status = PostulateStatus::PreconditionUnmet;
    rep.detail = rep.sampled ? "no consistent sub-base found among samples"
                             : "no sub-base joins the incoming program consistently";
    return rep;
  }

  std::string why;
  auto r = try_revise(base, incoming, cfg, &why);
  if (!r) {
    rep.status = PostulateStatus::Violated;
    rep.detail = "a consistent sub-base exists but revision failed: " + why;
    return rep;
  }
  if (!r->answer_set.consistent) {
    rep.status = PostulateStatus::Violated;
    rep.detail = "revision result is inconsistent";
    return rep;
  }
  rep.status = PostulateStatus::Holds;
  return rep;
}

PostulateReport check_fullness(const Program& base, const Program& incoming,
                               const RevisionConfig& cfg) {
  PostulateReport rep{"fullness"};
  std::string why;
  auto r = try_revise(base, incoming, cfg, &why);
  if (!r) {
    rep.status = PostulateStatus::PreconditionUnmet;
    rep.detail = "revision failed: " + why;
    return rep;
  }
  if (r->removed.rules.empty()) {
    rep.status = PostulateStatus::Holds;
    rep.detail = "nothing was removed";
    return rep;
  }
  for (const auto& id : r->removed.rules) {
    std::set<std::string> rest = r->removed.rules;
    rest.erase(id);
    if (union_consistent(base.without(rest), incoming, cfg)) {
      rep.status = PostulateStatus::Violated;
      rep.detail = "rule " + id + " was removed although keeping it stays consistent";
      return rep;
    }
  }
  rep.status = PostulateStatus::Holds;
  return rep;
}

PostulateReport check_uniformity(const Program& base, const Program& incoming,
                                 const Program& alternative, const RevisionConfig& cfg,
                                 std::uint64_t seed) {
  PostulateReport rep{"uniformity"};
  std::vector<std::string> ids;
  for (const auto& r : base.rules()) ids.push_back(r.id);

  bool premise = true;
  std::string counterexample;
  auto agree = [&](const std::set<std::string>& s) {
    Program sub = base.restricted_to(s);
    if (union_consistent(sub, incoming, cfg) != union_consistent(sub, alternative, cfg)) {
      premise = false;
      counterexample = join(s);
    }
    return premise;
  };
  if (base.size() <= kExhaustiveRuleLimit) {
    scan_subsets(ids, agree);
  } else {
    rep.sampled = true;
    Rng rng(seed);
    for (int i = 0; i < kPremiseSamples && premise; ++i) {
      agree(random_subset(ids, rng));
    }
  }
  if (!premise) {
    rep.status = PostulateStatus::PreconditionUnmet;
    rep.detail = "programs disagree on sub-base " + counterexample;
    return rep;
  }

  std::string why_q;
  std::string why_r;
  auto rq = try_revise(base, incoming, cfg, &why_q);
  auto rr = try_revise(base, alternative, cfg, &why_r);
  if (!rq && !rr) {
    rep.status = PostulateStatus::Holds;
    rep.detail = "both revisions fail the same way";
    return rep;
  }
  if (!rq || !rr) {
    rep.status = PostulateStatus::PreconditionUnmet;
    rep.detail = "revision failed on one side only: " + (rq ? why_r : why_q);
    return rep;
  }
  if (rq->removed.rules == rr->removed.rules) {
    rep.status = PostulateStatus::Holds;
  } else {
    rep.status = PostulateStatus::Violated;
    rep.detail = "removed " + join(rq->removed.rules) + " against " + join(rr->removed.rules);
  }
  if (rep.sampled && rep.detail.empty()) rep.detail = "premise sampled";
  return rep;
}

PostulateReport check_weak_disjunction(const Program& block1, const Program& block2,
                                       const Program& incoming, const RevisionConfig& cfg) {
  for (const auto& r : block2.rules()) {
    if (block1.contains(r.id)) {
      return {"weak-disjunction", PostulateStatus::PreconditionUnmet,
              "blocks share rule id " + r.id};
    }
  }
  // Independence premise: the base blocks must not interact.
  std::set<std::string> atoms1 = program_atom_keys(block1);
  std::set<std::string> atoms2 = program_atom_keys(block2);
  for (const auto& k : atoms1) {
    if (atoms2.count(k)) {
      return {"weak-disjunction", PostulateStatus::PreconditionUnmet,
              "base blocks share atom " + k};
    }
  }
  // Nor may any connected cluster of incoming rules span both blocks: the
  // cluster would react to the blocks' union in ways no part can reproduce.
  std::vector<int> roots = component_roots(incoming);
  std::map<int, std::set<std::string>> cluster_atoms;
  for (std::size_t i = 0; i < incoming.size(); ++i) {
    auto keys = rule_atom_keys(incoming.rules()[i]);
    cluster_atoms[roots[i]].insert(keys.begin(), keys.end());
  }
  for (const auto& [root, keys] : cluster_atoms) {
    bool touches1 = false;
    bool touches2 = false;
    for (const auto& k : keys) {
      touches1 = touches1 || atoms1.count(k) != 0;
      touches2 = touches2 || atoms2.count(k) != 0;
    }
    if (touches1 && touches2) {
      return {"weak-disjunction", PostulateStatus::PreconditionUnmet,
              "a cluster of incoming rules links the base blocks"};
    }
  }
  std::string why;
  auto whole = try_revise(concat(block1, block2), incoming, cfg, &why);
  auto part1 = try_revise(block1, incoming, cfg, &why);
  auto part2 = try_revise(block2, incoming, cfg, &why);
  return compare_decomposition("weak-disjunction", whole, part1, part2, why, cfg.solve.eps);
}

PostulateReport check_weak_parallelism(const Program& base, const Program& incoming1,
                                       const Program& incoming2, const RevisionConfig& cfg) {
  for (const auto& r : incoming2.rules()) {
    if (incoming1.contains(r.id)) {
      return {"weak-parallelism", PostulateStatus::PreconditionUnmet,
              "incoming blocks share rule id " + r.id};
    }
  }
  // The second block claims every base cluster it can reach, support rules
  // included; untouched clusters are revised against the first block.
  std::set<std::string> atoms2 = program_atom_keys(incoming2);
  std::vector<int> roots = component_roots(base);
  std::set<int> claimed;
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (const auto& k : rule_atom_keys(base.rules()[i])) {
      if (atoms2.count(k)) {
        claimed.insert(roots[i]);
        break;
      }
    }
  }
  Program p1;
  Program p2;
  for (std::size_t i = 0; i < base.size(); ++i) {
    (claimed.count(roots[i]) ? p2 : p1).add(base.rules()[i]);
  }
  // Independence premise: each half of the base, with its incoming block,
  // must stay clear of the other half's atoms.
  std::set<std::string> side1 = program_atom_keys(p1);
  for (const auto& k : program_atom_keys(incoming1)) side1.insert(k);
  std::set<std::string> side2 = program_atom_keys(p2);
  for (const auto& k : program_atom_keys(incoming2)) side2.insert(k);
  for (const auto& k : side1) {
    if (side2.count(k)) {
      return {"weak-parallelism", PostulateStatus::PreconditionUnmet,
              "the split couples through atom " + k};
    }
  }
  std::string why;
  auto whole = try_revise(base, concat(incoming1, incoming2), cfg, &why);
  auto part1 = try_revise(p1, incoming1, cfg, &why);
  auto part2 = try_revise(p2, incoming2, cfg, &why);
  return compare_decomposition("weak-parallelism", whole, part1, part2, why, cfg.solve.eps);
}

Program rename_private_atoms(const Program& p, const Program& reference,
                             const std::string& suffix) {
  std::set<std::string> known = program_atom_keys(reference);
  std::set<std::string> used;
  for (const auto& a : p.atom_base()) used.insert(a.predicate);
  for (const auto& a : reference.atom_base()) used.insert(a.predicate);

  auto rename = [&](Atom a) {
    if (known.count(atom_key(a))) return a;
    std::string fresh = a.predicate + suffix;
    while (used.count(fresh)) fresh += suffix;
    a.predicate = fresh;
    return a;
  };

  Program out;
  for (const auto& r : p.rules()) {
    Rule nr = r;
    nr.head.atom = rename(nr.head.atom);
    for (auto& e : nr.body) {
      if (e.kind != ElementKind::Constant) e.lit.atom = rename(e.lit.atom);
    }
    out.add(std::move(nr));
  }
  return out;
}

std::pair<Program, Program> split_by_components(const Program& p) {
  std::vector<int> roots = component_roots(p);
  std::map<int, int> component_index;  // root -> alternating 0/1
  int next = 0;
  std::pair<Program, Program> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto it = component_index.find(roots[i]);
    if (it == component_index.end()) it = component_index.emplace(roots[i], next++).first;
    const Rule& r = p.rules()[i];
    if (it->second % 2 == 0) {
      out.first.add(r);
    } else {
      out.second.add(r);
    }
  }
  return out;
}

std::vector<PostulateReport> check_all(const Program& base, const Program& incoming,
                                       const std::optional<Program>& alternative,
                                       const RevisionConfig& cfg, std::uint64_t seed) {
  std::vector<PostulateReport> out;
  out.push_back(check_success(base, incoming, cfg));
  out.push_back(check_inclusion(base, incoming, cfg));
  out.push_back(check_nm_consistency(base, incoming, cfg, seed));
  out.push_back(check_fullness(base, incoming, cfg));
  Program alt = alternative ? *alternative : rename_private_atoms(incoming, base);
  out.push_back(check_uniformity(base, incoming, alt, cfg, seed));
  auto [b1, b2] = split_by_components(base);
  out.push_back(check_weak_disjunction(b1, b2, incoming, cfg));
  auto [q1, q2] = split_by_components(incoming);
  out.push_back(check_weak_parallelism(base, q1, q2, cfg));
  return out;
}

}  // namespace unasp
