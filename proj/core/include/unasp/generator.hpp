#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "unasp/syntax.hpp"

namespace unasp {

// All randomness flows through this engine; the stream of draws is fixed by
// the standard, so a seed pins the generated programs on every platform.
using Rng = std::mt19937_64;

// Uniform draw in [0,1) using the top 53 bits, avoiding the unspecified
// standard distributions.
double unit_draw(Rng& rng);
int int_draw(Rng& rng, int lo, int hi);  // inclusive bounds

struct GeneratorOptions {
  int atoms = 6;
  int rules = 8;
  int max_body = 3;
  double exact_weight_prob = 0.35;  // chance of a crisp [1,1] weight
  double max_weight_width = 0.4;
  double naf_prob = 0.15;           // per body literal
  double neg_head_prob = 0.2;
  double body_neg_prob = 0.1;       // strongly negated body literal
  double const_element_prob = 0.1;  // interval constant in the body
  double cross_layer_prob = 0.05;   // body reference ignoring stratification
  // Interval endpoints snap to this grid so that equal widths, and with
  // them genuine conflicts, actually occur.
  double quantum = 0.05;
};

// Random ground program over atoms a1..aN with rule ids prefix1..prefixM.
// Bodies mostly reference lower-numbered atoms, which keeps the programs
// stratified and the solver convergent.
Program generate_program(const GeneratorOptions& opts, Rng& rng,
                         const std::string& id_prefix = "r",
                         const std::string& atom_prefix = "a");

// A base program (ids p1..) and a smaller, more contrary incoming program
// (ids q1..) over the same vocabulary.
std::pair<Program, Program> generate_revision_pair(const GeneratorOptions& opts, Rng& rng);

}  // namespace unasp
