#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "unasp/interpretation.hpp"
#include "unasp/syntax.hpp"

namespace unasp {

struct BodyExpr;
using ExprPtr = std::shared_ptr<const BodyExpr>;

// Expression tree on the right hand side of a transformed equation.
struct BodyExpr {
  enum class Kind {
    Const,  // fixed interval
    Ref,    // current value of a literal
    And,    // product t-norm over the children
    Or,     // dual t-conorm over the children
    Merge,  // evidence aggregation of exactly two children
    CNeg,   // strong negation of the single child
    Naf,    // negation as failure of the single child
  };

  Kind kind = Kind::Const;
  TruthInterval value = kUnknown;  // Const only
  Literal ref;                     // Ref only
  std::vector<ExprPtr> children;
};

ExprPtr make_const(TruthInterval v);
ExprPtr make_ref(Literal l);
// Drops [1,1] constants; empty becomes [1,1], a single child is unwrapped.
ExprPtr make_and(std::vector<ExprPtr> children);
// A single child is unwrapped.
ExprPtr make_or(std::vector<ExprPtr> children);
ExprPtr make_merge(ExprPtr a, ExprPtr b);
ExprPtr make_cneg(ExprPtr a);
ExprPtr make_naf(ExprPtr a);

bool expr_equal(const ExprPtr& a, const ExprPtr& b);

// "merge(and([0.7,0.9], q, r), neg(t))" and the like.
std::string to_string(const ExprPtr& e);

// One fixpoint equation of the transformed program.
struct TransformedEquation {
  std::string id;    // "r1^T", ...; empty for mirror equations
  Literal head;
  ExprPtr expr;
  std::set<std::string> sources;  // rules this equation was built from
  bool mirror = false;  // derived complement equation, not a table row
};

struct TransformedProgram {
  std::vector<TransformedEquation> equations;
  std::set<Atom> atoms;

  const TransformedEquation* find(const Literal& head) const;
  std::set<Literal> literals() const;  // both polarities of every atom
};

// Rewrites a ground program into one fixpoint equation per constrained
// literal. Atoms with rules for both polarities get a positive equation
// merging the two sides plus a mirror equation for the complement; atoms
// with rules for one polarity get the disjunction of those rules; atoms
// with no rules get the unknown constant. Equations are ordered by first
// head occurrence, then remaining atoms by first body occurrence.
TransformedProgram transform(const Program& p);

// Evaluates bottom-up; any irregular child value collapses the node to the
// contradiction sentinel.
TruthInterval eval_expr(const ExprPtr& e, const Interpretation& i, double eps = kEps,
                        double xi = kContradictionValue);

struct TableRow {
  std::string id;
  Literal head;
  std::string expr;
  std::set<std::string> sources;
};

// The non-mirror equations in order, with printable expressions.
std::vector<TableRow> transformation_table(const TransformedProgram& tp);
std::string to_string(const TransformedProgram& tp);

// Top-down expansion of a literal through the equations. Each literal is
// expanded at most once per branch; a repeat on the same branch becomes a
// revisit leaf. Children follow the left to right order of the references
// in the equation body.
struct DerivationNode {
  Literal lit;
  bool revisit = false;
  const TransformedEquation* equation = nullptr;  // null: unconstrained or revisit
  std::vector<DerivationNode> children;
};

struct Derivation {
  DerivationNode root;
  std::set<std::string> equation_ids;  // table ids of the equations expanded
  std::set<std::string> source_rules;  // rules behind those equations
};

Derivation resolution_tree(const TransformedProgram& tp, const Literal& root);

}  // namespace unasp
