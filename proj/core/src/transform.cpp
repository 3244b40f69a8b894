#include "unasp/transform.hpp"

#include <algorithm>
#include <map>

namespace unasp {
namespace {

ExprPtr make_node(BodyExpr e) { return std::make_shared<const BodyExpr>(std::move(e)); }

bool is_one_const(const ExprPtr& e) {
  return e->kind == BodyExpr::Kind::Const && e->value == TruthInterval{1.0, 1.0};
}

void collect_refs(const ExprPtr& e, std::vector<Literal>& out) {
  if (e->kind == BodyExpr::Kind::Ref) {
    out.push_back(e->ref);
    return;
  }
  for (const auto& c : e->children) collect_refs(c, out);
}

}  // namespace

ExprPtr make_const(TruthInterval v) {
  BodyExpr e;
  e.kind = BodyExpr::Kind::Const;
  e.value = v;
  return make_node(std::move(e));
}

ExprPtr make_ref(Literal l) {
  BodyExpr e;
  e.kind = BodyExpr::Kind::Ref;
  e.ref = std::move(l);
  return make_node(std::move(e));
}

ExprPtr make_and(std::vector<ExprPtr> children) {
  std::vector<ExprPtr> kept;
  for (auto& c : children) {
    if (!is_one_const(c)) kept.push_back(std::move(c));
  }
  if (kept.empty()) return make_const({1.0, 1.0});
  if (kept.size() == 1) return kept.front();
  BodyExpr e;
  e.kind = BodyExpr::Kind::And;
  e.children = std::move(kept);
  return make_node(std::move(e));
}

ExprPtr make_or(std::vector<ExprPtr> children) {
  if (children.size() == 1) return children.front();
  BodyExpr e;
  e.kind = BodyExpr::Kind::Or;
  e.children = std::move(children);
  return make_node(std::move(e));
}

ExprPtr make_merge(ExprPtr a, ExprPtr b) {
  BodyExpr e;
  e.kind = BodyExpr::Kind::Merge;
  e.children = {std::move(a), std::move(b)};
  return make_node(std::move(e));
}

ExprPtr make_cneg(ExprPtr a) {
  BodyExpr e;
  e.kind = BodyExpr::Kind::CNeg;
  e.children = {std::move(a)};
  return make_node(std::move(e));
}

ExprPtr make_naf(ExprPtr a) {
  BodyExpr e;
  e.kind = BodyExpr::Kind::Naf;
  e.children = {std::move(a)};
  return make_node(std::move(e));
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case BodyExpr::Kind::Const:
      return a->value == b->value;
    case BodyExpr::Kind::Ref:
      return a->ref == b->ref;
    default:
      break;
  }
  if (a->children.size() != b->children.size()) return false;
  for (std::size_t i = 0; i < a->children.size(); ++i) {
    if (!expr_equal(a->children[i], b->children[i])) return false;
  }
  return true;
}

std::string to_string(const ExprPtr& e) {
  auto join = [](const std::vector<ExprPtr>& children) {
    std::string out;
    for (std::size_t i = 0; i < children.size(); ++i) {
      if (i) out += ", ";
      out += to_string(children[i]);
    }
    return out;
  };
  switch (e->kind) {
    case BodyExpr::Kind::Const:
      return to_string(e->value);
    case BodyExpr::Kind::Ref:
      return literal_key(e->ref);
    case BodyExpr::Kind::And:
      return "and(" + join(e->children) + ")";
    case BodyExpr::Kind::Or:
      return "or(" + join(e->children) + ")";
    case BodyExpr::Kind::Merge:
      return "merge(" + join(e->children) + ")";
    case BodyExpr::Kind::CNeg:
      return "neg(" + to_string(e->children[0]) + ")";
    case BodyExpr::Kind::Naf:
      return "not(" + to_string(e->children[0]) + ")";
  }
  return "?";
}

const TransformedEquation* TransformedProgram::find(const Literal& head) const {
  for (const auto& eq : equations) {
    if (eq.head == head) return &eq;
  }
  return nullptr;
}

std::set<Literal> TransformedProgram::literals() const {
  std::set<Literal> out;
  for (const auto& a : atoms) {
    out.insert({a, false});
    out.insert({a, true});
  }
  return out;
}

namespace {

ExprPtr element_expr(const BodyElement& e) {
  switch (e.kind) {
    case ElementKind::Naf:
      return make_naf(make_ref(e.lit));
    case ElementKind::Constant:
      return make_const(e.value);
    case ElementKind::Plain:
    default:
      return make_ref(e.lit);
  }
}

ExprPtr rule_expr(const Rule& r) {
  std::vector<ExprPtr> parts;
  parts.push_back(make_const(r.weight));
  for (const auto& e : r.body) parts.push_back(element_expr(e));
  return make_and(std::move(parts));
}

ExprPtr rules_expr(const std::vector<const Rule*>& rules) {
  std::vector<ExprPtr> parts;
  parts.reserve(rules.size());
  for (const Rule* r : rules) parts.push_back(rule_expr(*r));
  return make_or(std::move(parts));
}

}  // namespace

TransformedProgram transform(const Program& p) {
  // Atom layout: head atoms by first occurrence, then body-only atoms.
  std::vector<Atom> order;
  std::set<Atom> seen;
  for (const auto& r : p.rules()) {
    if (seen.insert(r.head.atom).second) order.push_back(r.head.atom);
  }
  for (const auto& r : p.rules()) {
    for (const auto& e : r.body) {
      if (e.kind != ElementKind::Constant && seen.insert(e.lit.atom).second) {
        order.push_back(e.lit.atom);
      }
    }
  }

  TransformedProgram tp;
  tp.atoms = std::set<Atom>(order.begin(), order.end());

  int counter = 1;
  for (const auto& atom : order) {
    std::vector<const Rule*> pos;
    std::vector<const Rule*> neg;
    for (const auto& r : p.rules()) {
      if (r.head.atom != atom) continue;
      (r.head.negated ? neg : pos).push_back(&r);
    }

    TransformedEquation eq;
    eq.id = "r" + std::to_string(counter++) + "^T";
    for (const Rule* r : pos) eq.sources.insert(r->id);
    for (const Rule* r : neg) eq.sources.insert(r->id);

    if (!pos.empty() && !neg.empty()) {
      eq.head = {atom, false};
      eq.expr = make_merge(rules_expr(pos), make_cneg(rules_expr(neg)));
      tp.equations.push_back(eq);

      TransformedEquation mirror;
      mirror.head = {atom, true};
      mirror.expr = make_cneg(make_ref({atom, false}));
      mirror.sources = eq.sources;
      mirror.mirror = true;
      tp.equations.push_back(std::move(mirror));
    } else if (!pos.empty()) {
      eq.head = {atom, false};
      eq.expr = rules_expr(pos);
      tp.equations.push_back(std::move(eq));
    } else if (!neg.empty()) {
      eq.head = {atom, true};
      eq.expr = rules_expr(neg);
      tp.equations.push_back(std::move(eq));
    } else {
      eq.head = {atom, false};
      eq.expr = make_const(kUnknown);
      tp.equations.push_back(std::move(eq));
    }
  }
  return tp;
}

TruthInterval eval_expr(const ExprPtr& e, const Interpretation& i, double eps, double xi) {
  switch (e->kind) {
    case BodyExpr::Kind::Const:
      return e->value;
    case BodyExpr::Kind::Ref:
      return i.value(e->ref);
    default:
      break;
  }
  std::vector<TruthInterval> vals;
  vals.reserve(e->children.size());
  for (const auto& c : e->children) {
    TruthInterval v = eval_expr(c, i, eps, xi);
    if (!is_regular(v, eps)) return contradiction(xi);
    vals.push_back(v);
  }
  switch (e->kind) {
    case BodyExpr::Kind::And: {
      TruthInterval acc{1.0, 1.0};
      for (const auto& v : vals) acc = tnorm(acc, v);
      return acc;
    }
    case BodyExpr::Kind::Or: {
      TruthInterval acc{0.0, 0.0};
      for (const auto& v : vals) acc = tconorm(acc, v);
      return acc;
    }
    case BodyExpr::Kind::Merge:
      return k_aggregate(vals[0], vals[1], eps, xi);
    case BodyExpr::Kind::CNeg:
      return cneg(vals[0]);
    case BodyExpr::Kind::Naf:
      return naf(vals[0]);
    default:
      return kUnknown;
  }
}

std::vector<TableRow> transformation_table(const TransformedProgram& tp) {
  std::vector<TableRow> rows;
  for (const auto& eq : tp.equations) {
    if (eq.mirror) continue;
    rows.push_back({eq.id, eq.head, to_string(eq.expr), eq.sources});
  }
  return rows;
}

std::string to_string(const TransformedProgram& tp) {
  std::string out;
  for (const auto& row : transformation_table(tp)) {
    out += row.id + ": " + literal_key(row.head) + " <- " + row.expr + "   {";
    bool first = true;
    for (const auto& s : row.sources) {
      if (!first) out += ", ";
      out += s;
      first = false;
    }
    out += "}\n";
  }
  return out;
}

namespace {

DerivationNode expand(const TransformedProgram& tp, const Literal& lit,
                      std::set<Literal>& path, Derivation& d) {
  DerivationNode node;
  node.lit = lit;
  if (path.count(lit)) {
    node.revisit = true;
    return node;
  }
  const TransformedEquation* eq = tp.find(lit);
  if (!eq) return node;  // unconstrained leaf

  node.equation = eq;
  if (!eq->id.empty()) d.equation_ids.insert(eq->id);
  d.source_rules.insert(eq->sources.begin(), eq->sources.end());

  path.insert(lit);
  std::vector<Literal> refs;
  collect_refs(eq->expr, refs);
  for (const auto& r : refs) node.children.push_back(expand(tp, r, path, d));
  path.erase(lit);
  return node;
}

}  // namespace

Derivation resolution_tree(const TransformedProgram& tp, const Literal& root) {
  Derivation d;
  std::set<Literal> path;
  d.root = expand(tp, root, path, d);
  return d;
}

}  // namespace unasp
