#include "unasp/generator.hpp"

#include <algorithm>
#include <cmath>

namespace unasp {

double unit_draw(Rng& rng) {
  return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

int int_draw(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(unit_draw(rng) * (hi - lo + 1));
}

namespace {

double grid_draw(Rng& rng, double lo, double hi, double quantum) {
  int steps = static_cast<int>(std::round((hi - lo) / quantum));
  return lo + quantum * int_draw(rng, 0, steps);
}

TruthInterval random_weight(const GeneratorOptions& o, Rng& rng) {
  if (unit_draw(rng) < o.exact_weight_prob) return {1.0, 1.0};
  double w = grid_draw(rng, 0.0, o.max_weight_width, o.quantum);
  double lo = grid_draw(rng, 0.0, 1.0 - w, o.quantum);
  return {lo, std::min(1.0, lo + w)};
}

TruthInterval random_interval(const GeneratorOptions& o, Rng& rng) {
  double a = grid_draw(rng, 0.0, 1.0, o.quantum);
  double b = grid_draw(rng, 0.0, 1.0, o.quantum);
  if (a > b) std::swap(a, b);
  return {a, b};
}

Atom make_atom(const std::string& prefix, int index) {
  return {prefix + std::to_string(index + 1), {}};
}

}  // namespace

Program generate_program(const GeneratorOptions& opts, Rng& rng,
                         const std::string& id_prefix, const std::string& atom_prefix) {
  Program out;
  for (int i = 0; i < opts.rules; ++i) {
    Rule r;
    r.id = id_prefix + std::to_string(i + 1);
    int h = int_draw(rng, 0, opts.atoms - 1);
    r.head = {make_atom(atom_prefix, h), unit_draw(rng) < opts.neg_head_prob};
    int body_len = int_draw(rng, 0, opts.max_body);
    for (int b = 0; b < body_len; ++b) {
      BodyElement e;
      if (h == 0 || unit_draw(rng) < opts.const_element_prob) {
        e.kind = ElementKind::Constant;
        e.value = random_interval(opts, rng);
      } else {
        int j = unit_draw(rng) < opts.cross_layer_prob ? int_draw(rng, 0, opts.atoms - 1)
                                                       : int_draw(rng, 0, h - 1);
        e.lit = {make_atom(atom_prefix, j), unit_draw(rng) < opts.body_neg_prob};
        e.kind = unit_draw(rng) < opts.naf_prob ? ElementKind::Naf : ElementKind::Plain;
      }
      r.body.push_back(std::move(e));
    }
    r.weight = random_weight(opts, rng);
    out.add(std::move(r));
  }
  return out;
}

std::pair<Program, Program> generate_revision_pair(const GeneratorOptions& opts, Rng& rng) {
  Program base = generate_program(opts, rng, "p");
  GeneratorOptions contrary = opts;
  contrary.rules = std::max(1, opts.rules / 2);
  contrary.neg_head_prob = std::min(0.5, opts.neg_head_prob + 0.2);
  Program incoming = generate_program(contrary, rng, "q");
  return {std::move(base), std::move(incoming)};
}

}  // namespace unasp
