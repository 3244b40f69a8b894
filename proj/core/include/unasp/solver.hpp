#pragma once

#include <set>
#include <stdexcept>
#include <string>

#include "unasp/interpretation.hpp"
#include "unasp/syntax.hpp"
#include "unasp/transform.hpp"

namespace unasp {

struct SolveOptions {
  double eps = kEps;
  double xi = kContradictionValue;
  double inner_tolerance = 1e-9;   // fixpoint iteration stop threshold
  double outer_tolerance = 1e-6;   // stability threshold across reducts
  int max_inner_sweeps = 10000;
  int max_outer_iterations = 1000;
};

class SolveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The fixpoint iteration failed to stabilise.
class NonConvergenceError : public SolveError {
 public:
  NonConvergenceError(std::set<std::string> unstable, int sweeps);
  const std::set<std::string>& unstable_atoms() const { return unstable_; }

 private:
  std::set<std::string> unstable_;
};

// The reduct sequence failed to stabilise: no answer set.
class OscillationError : public SolveError {
 public:
  explicit OscillationError(int iterations);
};

struct AnswerSet {
  Interpretation values;  // every literal of the program explicitly present
  bool consistent = true;
  std::set<std::string> contradiction_atoms;  // atom keys with irregular values
};

// Least-knowledge supported model of the equations: every literal starts at
// [0,1] and the equations are iterated jacobi-style until stable.
Interpretation k_minimal_model(const TransformedProgram& tp, const SolveOptions& opts = {});

// Replaces every negation-as-failure element by its value under i.
Program reduct(const Program& p, const Interpretation& i);

// Iterates reduct + least model until the guess reproduces itself. The
// program must be ground.
AnswerSet answer_sets(const Program& p, const SolveOptions& opts = {});

// Largest equation residual of i, measuring how far i is from being
// supported by the transformed program.
double max_equation_residual(const TransformedProgram& tp, const Interpretation& i,
                             const SolveOptions& opts = {});

}  // namespace unasp
