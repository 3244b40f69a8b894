#include "unasp/revision.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>

#include "unasp/transform.hpp"

namespace unasp {
namespace {

std::set<std::string> exceptions_for(const Rule& r, const Program& other) {
  std::set<std::string> out;
  Literal complement = r.head.complement();
  for (const auto& o : other.rules()) {
    if (o.head == complement) out.insert(o.id);
  }
  return out;
}

TruthInterval hedged_weight(const Rule& r, const Program& other, double delta, double eps) {
  if (width(r.weight) <= eps) return r.weight;
  auto ex = exceptions_for(r, other);
  if (ex.empty()) return r.weight;
  return update_weight(r.weight, static_cast<int>(ex.size()), delta);
}

// Base rules with their labels made disjoint from the incoming program's.
Program relabel_base(const Program& base, const Program& incoming) {
  Program out;
  for (const auto& r : base.rules()) {
    Rule nr = r;
    nr.origin = RuleOrigin::Base;
    if (incoming.contains(nr.id)) {
      std::string candidate = nr.id + "_P";
      int bump = 2;
      while (incoming.contains(candidate) || base.contains(candidate) ||
             out.contains(candidate)) {
        candidate = nr.id + "_P" + std::to_string(bump++);
      }
      nr.id = candidate;
    }
    out.add(std::move(nr));
  }
  return out;
}

std::optional<AnswerSet> try_answer_sets(const Program& p, const SolveOptions& opts) {
  try {
    return answer_sets(p, opts);
  } catch (const SolveError&) {
    return std::nullopt;
  }
}

// id inside the combined program -> original base id
std::map<std::string, std::string> union_to_base_ids(const Program& base,
                                                     const Program& incoming) {
  std::map<std::string, std::string> out;
  Program rb = relabel_base(base, incoming);
  for (std::size_t i = 0; i < base.size(); ++i) {
    out[rb.rules()[i].id] = base.rules()[i].id;
  }
  return out;
}

std::set<std::string> atom_keys(const Program& p) {
  std::set<std::string> out;
  for (const auto& a : p.atom_base()) out.insert(atom_key(a));
  return out;
}

// Consistent answer set of p as a singleton collection, else empty.
std::vector<Interpretation> consistent_answer_sets(const Program& p, const SolveOptions& opts) {
  std::vector<Interpretation> out;
  if (auto as = try_answer_sets(p, opts); as && as->consistent) {
    out.push_back(as->values);
  }
  return out;
}

double pruned_base_distance(const Program& base, const std::set<std::string>& removed,
                            const RevisionConfig& cfg) {
  return answer_set_distance(consistent_answer_sets(base, cfg.solve),
                             consistent_answer_sets(base.without(removed), cfg.solve),
                             base.atom_base(), cfg.distance);
}

template <typename F>
void for_each_combination(const std::vector<std::string>& pool, int k, F&& f) {
  if (k <= 0 || k > static_cast<int>(pool.size())) return;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  int n = static_cast<int>(pool.size());
  while (true) {
    std::set<std::string> s;
    for (int i : idx) s.insert(pool[i]);
    f(s);
    int d = k - 1;
    while (d >= 0 && idx[d] == n - k + d) --d;
    if (d < 0) return;
    ++idx[d];
    for (int j = d + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Distinct unions of one candidate per list, ordered by size then label
// order; the enumeration is capped.
std::vector<std::set<std::string>> product_unions(
    const std::vector<std::vector<std::set<std::string>>>& lists, long cap) {
  std::set<std::set<std::string>> seen;
  std::vector<std::size_t> idx(lists.size(), 0);
  long produced = 0;
  while (true) {
    std::set<std::string> u;
    for (std::size_t i = 0; i < lists.size(); ++i) {
      u.insert(lists[i][idx[i]].begin(), lists[i][idx[i]].end());
    }
    seen.insert(std::move(u));
    if (++produced >= cap) break;
    std::size_t d = lists.size();
    bool done = true;
    while (d > 0) {
      --d;
      if (++idx[d] < lists[d].size()) {
        done = false;
        break;
      }
      idx[d] = 0;
    }
    if (done) break;
  }
  std::vector<std::set<std::string>> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const std::set<std::string>& a, const std::set<std::string>& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     return a < b;
                   });
  return out;
}

bool fully_consistent(const Program& base, const std::set<std::string>& removed,
                      const Program& incoming, const RevisionConfig& cfg) {
  auto as = try_answer_sets(modified_union(base.without(removed), incoming, cfg), cfg.solve);
  return as && as->consistent;
}

}  // namespace

TruthInterval update_weight(TruthInterval w, int exception_count, double delta) {
  double step = delta * exception_count;
  return {std::max(0.0, w.lo - step), std::min(1.0, w.hi + step)};
}

std::vector<DispositionLink> disposition_links(const Program& base, const Program& incoming) {
  Program rb = relabel_base(base, incoming);
  std::vector<DispositionLink> out;
  for (const auto& r : rb.rules()) {
    if (width(r.weight) <= kEps) continue;
    auto ex = exceptions_for(r, incoming);
    if (!ex.empty()) out.push_back({r.id, std::move(ex)});
  }
  for (const auto& r : incoming.rules()) {
    if (width(r.weight) <= kEps) continue;
    auto ex = exceptions_for(r, rb);
    if (!ex.empty()) out.push_back({r.id, std::move(ex)});
  }
  return out;
}

Program modified_union(const Program& base, const Program& incoming,
                       const RevisionConfig& cfg) {
  Program rb = relabel_base(base, incoming);
  Program out;
  for (const auto& r : rb.rules()) {
    Rule nr = r;
    nr.weight = hedged_weight(r, incoming, cfg.delta, cfg.solve.eps);
    out.add(std::move(nr));
  }
  for (const auto& r : incoming.rules()) {
    Rule nr = r;
    nr.origin = RuleOrigin::Incoming;
    nr.weight = hedged_weight(r, rb, cfg.delta, cfg.solve.eps);
    out.add(std::move(nr));
  }
  return out;
}

std::set<std::string> contradiction_set(const Program& base, const Program& incoming,
                                        const RevisionConfig& cfg) {
  AnswerSet as = answer_sets(modified_union(base, incoming, cfg), cfg.solve);
  std::set<std::string> base_atoms = atom_keys(base);
  std::set<std::string> incoming_atoms = atom_keys(incoming);
  std::set<std::string> out;
  for (const auto& k : as.contradiction_atoms) {
    if (base_atoms.count(k) && incoming_atoms.count(k)) out.insert(k);
  }
  return out;
}

std::map<std::string, std::vector<std::set<std::string>>> removal_candidates(
    const Program& base, const Program& incoming, const RevisionConfig& cfg) {
  std::map<std::string, std::vector<std::set<std::string>>> out;
  // Derivations are taken over the combined program: a contradiction may be
  // fed through incoming rules whose bodies rest on base rules.
  TransformedProgram tp = transform(modified_union(base, incoming, cfg));
  std::map<std::string, std::string> to_base = union_to_base_ids(base, incoming);

  for (const auto& name : contradiction_set(base, incoming, cfg)) {
    Atom atom;
    for (const auto& a : base.atom_base()) {
      if (atom_key(a) == name) {
        atom = a;
        break;
      }
    }
    std::set<std::string> pool_set;
    for (const auto& root : {Literal{atom, false}, Literal{atom, true}}) {
      Derivation d = resolution_tree(tp, root);
      for (const auto& id : d.source_rules) {
        auto it = to_base.find(id);
        if (it != to_base.end()) pool_set.insert(it->second);
      }
    }
    std::vector<std::string> pool(pool_set.begin(), pool_set.end());

    std::vector<std::set<std::string>> kept;
    int max_k = std::min<int>(cfg.max_candidate_size, static_cast<int>(pool.size()));
    for (int k = 1; k <= max_k; ++k) {
      for_each_combination(pool, k, [&](const std::set<std::string>& s) {
        for (const auto& c : kept) {
          if (std::includes(s.begin(), s.end(), c.begin(), c.end())) return;
        }
        auto as = try_answer_sets(modified_union(base.without(s), incoming, cfg), cfg.solve);
        if (as && !as->contradiction_atoms.count(name)) kept.push_back(s);
      });
    }
    if (kept.empty()) throw NoRemovalCandidatesError(name);
    out[name] = std::move(kept);
  }
  return out;
}

double interpretation_distance(const Interpretation& a, const Interpretation& b,
                               const std::set<Atom>& atoms, DistanceVariant variant) {
  double out = 0.0;
  for (const auto& atom : atoms) {
    Literal l{atom, false};
    out += interval_distance(a.value(l), b.value(l), variant);
  }
  return out;
}

double answer_set_distance(const std::vector<Interpretation>& a,
                           const std::vector<Interpretation>& b,
                           const std::set<Atom>& atoms, DistanceVariant variant) {
  if (a.empty() && b.empty()) return 0.0;
  if (a.empty() || b.empty()) return static_cast<double>(atoms.size());
  double out = 0.0;
  for (const auto& x : a) {
    for (const auto& y : b) {
      out = std::max(out, interpretation_distance(x, y, atoms, variant));
    }
  }
  return out;
}

RemovedSet choose_removed_set(
    const Program& base, const Program& incoming,
    const std::map<std::string, std::vector<std::set<std::string>>>& candidates,
    const RevisionConfig& cfg) {
  RemovedSet out;
  if (candidates.empty()) return out;
  double eps = cfg.solve.eps;

  std::vector<std::string> atoms;
  std::vector<std::set<std::string>> pools;
  for (const auto& [atom, cands] : candidates) {
    atoms.push_back(atom);
    std::set<std::string> pool;
    for (const auto& c : cands) pool.insert(c.begin(), c.end());
    pools.push_back(std::move(pool));
  }

  auto hedged_width = [&](const std::string& id) {
    return width(hedged_weight(*base.find(id), incoming, cfg.delta, eps));
  };
  // The rule of strictly least knowledge in the pool, if it is unique.
  auto unique_weakest = [&](const std::set<std::string>& pool) -> std::optional<std::string> {
    double wmax = -1.0;
    for (const auto& id : pool) wmax = std::max(wmax, hedged_width(id));
    std::vector<std::string> widest;
    for (const auto& id : pool) {
      if (hedged_width(id) >= wmax - eps) widest.push_back(id);
    }
    if (widest.size() == 1) return widest.front();
    return std::nullopt;
  };

  // Group atoms whose pools overlap.
  int n = static_cast<int>(atoms.size());
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
      for (const auto& id : pools[i]) {
        if (pools[j].count(id)) {
          overlap = true;
          break;
        }
      }
      if (overlap) parent[find(i)] = find(j);
    }
  }
  std::map<int, std::vector<int>> groups;  // keyed by smallest member
  {
    std::map<int, std::vector<int>> by_root;
    for (int i = 0; i < n; ++i) by_root[find(i)].push_back(i);
    for (auto& [root, members] : by_root) groups[members.front()] = members;
  }

  bool fallback = false;
  for (const auto& [first, members] : groups) {
    if (fallback) break;
    bool picked = false;

    if (members.size() == 1) {
      // Isolated conflict: take the unique least known rule when every
      // candidate is a single rule.
      const auto& cands = candidates.at(atoms[members[0]]);
      bool all_singletons =
          std::all_of(cands.begin(), cands.end(),
                      [](const std::set<std::string>& c) { return c.size() == 1; });
      if (all_singletons) {
        if (auto weakest = unique_weakest(pools[members[0]])) {
          out.rules.insert(*weakest);
          out.strategy_step[*weakest] = 1;
          picked = true;
        }
      }
    } else {
      // Overlapping conflicts: a unique least known rule shared by every
      // pool settles the whole group at once.
      std::set<std::string> shared = pools[members[0]];
      for (std::size_t i = 1; i < members.size(); ++i) {
        std::set<std::string> next;
        for (const auto& id : shared) {
          if (pools[members[i]].count(id)) next.insert(id);
        }
        shared = std::move(next);
      }
      if (!shared.empty()) {
        if (auto weakest = unique_weakest(shared)) {
          bool curing_everywhere = true;
          for (int m : members) {
            const auto& cands = candidates.at(atoms[m]);
            if (std::find(cands.begin(), cands.end(),
                          std::set<std::string>{*weakest}) == cands.end()) {
              curing_everywhere = false;
              break;
            }
          }
          if (curing_everywhere) {
            out.rules.insert(*weakest);
            out.strategy_step[*weakest] = 2;
            picked = true;
          }
        }
      }
    }

    if (picked) continue;

    // Ties or mixed candidates: enumerate the least known choices, keep the
    // smallest combinations that clear the group, and stay closest to the
    // base answer set.
    std::vector<std::vector<std::set<std::string>>> lists;
    for (int m : members) {
      const auto& cands = candidates.at(atoms[m]);
      bool all_singletons =
          std::all_of(cands.begin(), cands.end(),
                      [](const std::set<std::string>& c) { return c.size() == 1; });
      std::vector<std::set<std::string>> kept;
      if (all_singletons) {
        double wmax = -1.0;
        for (const auto& c : cands) wmax = std::max(wmax, hedged_width(*c.begin()));
        for (const auto& c : cands) {
          if (hedged_width(*c.begin()) >= wmax - eps) kept.push_back(c);
        }
      } else {
        kept = cands;
      }
      lists.push_back(std::move(kept));
    }

    bool found = false;
    std::size_t found_size = 0;
    double best_distance = 0.0;
    std::set<std::string> best;
    for (const auto& x : product_unions(lists, cfg.max_combinations)) {
      if (found && x.size() > found_size) break;
      auto as = try_answer_sets(modified_union(base.without(x), incoming, cfg), cfg.solve);
      if (!as) continue;
      bool cures = true;
      for (int m : members) {
        if (as->contradiction_atoms.count(atoms[m])) {
          cures = false;
          break;
        }
      }
      if (!cures) continue;
      double d = pruned_base_distance(base, x, cfg);
      if (!found) {
        found = true;
        found_size = x.size();
        best = x;
        best_distance = d;
      } else if (d < best_distance - eps) {
        best = x;
        best_distance = d;
      }
    }
    if (!found) {
      fallback = true;
      break;
    }
    for (const auto& id : best) {
      out.rules.insert(id);
      out.strategy_step[id] = 3;
    }
  }

  if (!fallback && !fully_consistent(base, out.rules, incoming, cfg)) fallback = true;

  if (fallback) {
    // Per-group choices interact: enumerate combinations across every
    // conflict jointly and take the smallest one that works.
    std::vector<std::vector<std::set<std::string>>> lists;
    for (const auto& [atom, cands] : candidates) lists.push_back(cands);
    out.rules.clear();
    out.strategy_step.clear();
    bool found = false;
    for (const auto& x : product_unions(lists, cfg.max_combinations)) {
      if (fully_consistent(base, x, incoming, cfg)) {
        out.rules = x;
        for (const auto& id : x) out.strategy_step[id] = 3;
        found = true;
        break;
      }
    }
    if (!found) {
      throw RevisionError("no combination of candidate removals restores consistency");
    }
  }

  // Inclusion-minimality: drop any rule whose removal was not needed.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& id : std::vector<std::string>(out.rules.begin(), out.rules.end())) {
      std::set<std::string> smaller = out.rules;
      smaller.erase(id);
      if (fully_consistent(base, smaller, incoming, cfg)) {
        out.rules = std::move(smaller);
        out.strategy_step.erase(id);
        changed = true;
        break;
      }
    }
  }

  out.distance = pruned_base_distance(base, out.rules, cfg);
  return out;
}

RevisionOutcome revise(const Program& base, const Program& incoming,
                       const RevisionConfig& cfg) {
  RevisionOutcome out;

  Program combined = modified_union(base, incoming, cfg);
  std::optional<AnswerSet> as = try_answer_sets(combined, cfg.solve);
  if (!as) {
    throw RevisionError("combined program has no answer set");
  }
  if (as->consistent) {
    out.result = std::move(combined);
    out.answer_set = std::move(*as);
    return out;
  }

  out.contradiction_atoms = contradiction_set(base, incoming, cfg);
  if (out.contradiction_atoms.empty()) {
    std::string atoms;
    for (const auto& k : as->contradiction_atoms) {
      if (!atoms.empty()) atoms += ", ";
      atoms += k;
    }
    throw RevisionError("contradictions on " + atoms +
                        " cannot be repaired by removing base rules");
  }

  out.candidates = removal_candidates(base, incoming, cfg);
  out.removed = choose_removed_set(base, incoming, out.candidates, cfg);
  out.result = modified_union(base.without(out.removed.rules), incoming, cfg);
  out.answer_set = answer_sets(out.result, cfg.solve);
  return out;
}

}  // namespace unasp
