#include "unasp/grounder.hpp"

#include <map>
#include <vector>

namespace unasp {
namespace {

void collect_terms(const Atom& a, std::set<std::string>& constants,
                   std::vector<std::string>& variables) {
  for (const auto& t : a.args) {
    if (is_variable(t)) {
      bool seen = false;
      for (const auto& v : variables) {
        if (v == t) {
          seen = true;
          break;
        }
      }
      if (!seen) variables.push_back(t);
    } else {
      constants.insert(t);
    }
  }
}

Atom substitute(const Atom& a, const std::map<std::string, std::string>& binding) {
  Atom out = a;
  for (auto& t : out.args) {
    auto it = binding.find(t);
    if (it != binding.end()) t = it->second;
  }
  return out;
}

}  // namespace

std::set<std::string> herbrand_universe(const Program& p) {
  std::set<std::string> constants;
  std::vector<std::string> ignored;
  for (const auto& r : p.rules()) {
    collect_terms(r.head.atom, constants, ignored);
    for (const auto& e : r.body) {
      if (e.kind != ElementKind::Constant) collect_terms(e.lit.atom, constants, ignored);
    }
  }
  return constants;
}

Program ground(const Program& p, const std::set<std::string>& extra_constants) {
  std::set<std::string> universe = herbrand_universe(p);
  universe.insert(extra_constants.begin(), extra_constants.end());

  Program out;
  std::set<std::string> taken;
  for (const auto& r : p.rules()) taken.insert(r.id);

  for (const auto& r : p.rules()) {
    std::set<std::string> ignored;
    std::vector<std::string> vars;
    collect_terms(r.head.atom, ignored, vars);
    for (const auto& e : r.body) {
      if (e.kind != ElementKind::Constant) collect_terms(e.lit.atom, ignored, vars);
    }
    if (vars.empty()) {
      out.add(r);
      continue;
    }
    if (universe.empty()) {
      throw GroundError("rule " + r.id + " has variables but the program has no constants");
    }

    // Odometer over the universe, one digit per variable, lexicographic.
    std::vector<std::string> consts(universe.begin(), universe.end());
    std::vector<std::size_t> idx(vars.size(), 0);
    while (true) {
      std::map<std::string, std::string> binding;
      for (std::size_t i = 0; i < vars.size(); ++i) binding[vars[i]] = consts[idx[i]];

      Rule inst = r;
      inst.head.atom = substitute(r.head.atom, binding);
      for (auto& e : inst.body) {
        if (e.kind != ElementKind::Constant) e.lit.atom = substitute(e.lit.atom, binding);
      }
      std::string id = r.id;
      for (const auto& v : vars) id += "_" + binding[v];
      int bump = 1;
      std::string candidate = id;
      while (taken.count(candidate)) {
        candidate = id + "_g" + std::to_string(bump++);
      }
      inst.id = candidate;
      taken.insert(candidate);
      out.add(std::move(inst));

      std::size_t d = vars.size();
      while (d > 0) {
        --d;
        if (++idx[d] < consts.size()) break;
        idx[d] = 0;
        if (d == 0) goto done_rule;
      }
    }
  done_rule:;
  }
  return out;
}

}  // namespace unasp
