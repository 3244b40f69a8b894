#include "unasp/solver.hpp"

#include <cmath>
#include <stdexcept>

namespace unasp {
namespace {

std::string join_keys(const std::set<std::string>& keys) {
  std::string out;
  for (const auto& k : keys) {
    if (!out.empty()) out += ", ";
    out += k;
  }
  return out;
}

}  // namespace

NonConvergenceError::NonConvergenceError(std::set<std::string> unstable, int sweeps)
    : SolveError("fixpoint iteration did not stabilise after " + std::to_string(sweeps) +
                 " sweeps; unstable: " + join_keys(unstable)),
      unstable_(std::move(unstable)) {}

OscillationError::OscillationError(int iterations)
    : SolveError("no answer set: candidate sequence still changing after " +
                 std::to_string(iterations) + " iterations") {}

Interpretation k_minimal_model(const TransformedProgram& tp, const SolveOptions& opts) {
  Interpretation current;
  for (const auto& l : tp.literals()) current.set(l, kUnknown);

  for (int sweep = 0; sweep < opts.max_inner_sweeps; ++sweep) {
    Interpretation next = current;
    double delta = 0.0;
    for (const auto& eq : tp.equations) {
      TruthInterval v = eval_expr(eq.expr, current, opts.eps, opts.xi);
      TruthInterval old = current.value(eq.head);
      delta = std::max(delta, std::fabs(v.lo - old.lo));
      delta = std::max(delta, std::fabs(v.hi - old.hi));
      next.set(eq.head, v);
    }
    if (delta <= opts.inner_tolerance) return next;
    current = next;
  }

  // One more evaluation to name the literals still moving.
  std::set<std::string> unstable;
  for (const auto& eq : tp.equations) {
    TruthInterval v = eval_expr(eq.expr, current, opts.eps, opts.xi);
    TruthInterval old = current.value(eq.head);
    if (std::fabs(v.lo - old.lo) > opts.inner_tolerance ||
        std::fabs(v.hi - old.hi) > opts.inner_tolerance) {
      unstable.insert(literal_key(eq.head));
    }
  }
  throw NonConvergenceError(std::move(unstable), opts.max_inner_sweeps);
}

Program reduct(const Program& p, const Interpretation& i) {
  Program out;
  for (const auto& r : p.rules()) {
    Rule nr = r;
    for (auto& e : nr.body) {
      if (e.kind == ElementKind::Naf) {
        e.kind = ElementKind::Constant;
        e.value = naf(i.value(e.lit));
        e.lit = Literal{};
      }
    }
    out.add(std::move(nr));
  }
  return out;
}

AnswerSet answer_sets(const Program& p, const SolveOptions& opts) {
  if (!p.ground()) {
    throw SolveError("program must be ground");
  }
  std::set<Literal> literals;
  for (const auto& a : p.atom_base()) {
    literals.insert({a, false});
    literals.insert({a, true});
  }

  Interpretation guess;
  for (int it = 0; it < opts.max_outer_iterations; ++it) {
    TransformedProgram tp = transform(reduct(p, guess));
    Interpretation model = k_minimal_model(tp, opts);
    if (max_difference(guess, model, literals) <= opts.outer_tolerance) {
      AnswerSet as;
      for (const auto& l : literals) as.values.set(l, model.value(l));
      for (const auto& a : irregular_atoms(as.values, opts.eps)) {
        as.contradiction_atoms.insert(atom_key(a));
      }
      as.consistent = as.contradiction_atoms.empty();
      return as;
    }
    guess = model;
  }
  throw OscillationError(opts.max_outer_iterations);
}

double max_equation_residual(const TransformedProgram& tp, const Interpretation& i,
                             const SolveOptions& opts) {
  double out = 0.0;
  for (const auto& eq : tp.equations) {
    TruthInterval v = eval_expr(eq.expr, i, opts.eps, opts.xi);
    TruthInterval h = i.value(eq.head);
    out = std::max(out, std::fabs(v.lo - h.lo));
    out = std::max(out, std::fabs(v.hi - h.hi));
  }
  return out;
}

}  // namespace unasp
