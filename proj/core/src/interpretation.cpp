#include "unasp/interpretation.hpp"

#include <cmath>

namespace unasp {

bool is_inconsistent(const Interpretation& i, double eps) {
  for (const auto& [lit, v] : i.values()) {
    if (!is_regular(v, eps)) return true;
  }
  return false;
}

std::set<Atom> irregular_atoms(const Interpretation& i, double eps) {
  std::set<Atom> out;
  for (const auto& [lit, v] : i.values()) {
    if (!is_regular(v, eps)) out.insert(lit.atom);
  }
  return out;
}

TruthInterval element_value(const Interpretation& i, const BodyElement& e) {
  switch (e.kind) {
    case ElementKind::Naf:
      return naf(i.value(e.lit));
    case ElementKind::Constant:
      return e.value;
    case ElementKind::Plain:
    default:
      return i.value(e.lit);
  }
}

TruthInterval body_value(const Interpretation& i, const std::vector<BodyElement>& body,
                         double eps, double xi) {
  TruthInterval acc{1.0, 1.0};
  for (const auto& e : body) {
    TruthInterval v = element_value(i, e);
    if (!is_regular(v, eps)) return contradiction(xi);
    acc = tnorm(acc, v);
  }
  return acc;
}

bool satisfies(const Interpretation& i, const Rule& r, double eps, double xi) {
  TruthInterval b = body_value(i, r.body, eps, xi);
  TruthInterval target = is_regular(b, eps) ? tnorm(b, r.weight) : b;
  TruthInterval h = i.value(r.head);
  if (approx_equal(h, target, eps)) return true;
  if (width(h) < width(target) - eps) return true;  // strictly more knowledge
  if (midpoint(h) > midpoint(target) + eps) return true;  // strictly more truth
  return false;
}

double max_difference(const Interpretation& a, const Interpretation& b,
                      const std::set<Literal>& literals) {
  double out = 0.0;
  for (const auto& l : literals) {
    TruthInterval x = a.value(l);
    TruthInterval y = b.value(l);
    out = std::max(out, std::fabs(x.lo - y.lo));
    out = std::max(out, std::fabs(x.hi - y.hi));
  }
  return out;
}

}  // namespace unasp
