#include <cmath>

#include "doctest.h"
#include "unasp/generator.hpp"
#include "unasp/interval.hpp"

using namespace unasp;

namespace {

TruthInterval random_regular(Rng& rng) {
  double a = unit_draw(rng);
  double b = unit_draw(rng);
  return a <= b ? TruthInterval{a, b} : TruthInterval{b, a};
}

bool close(TruthInterval x, TruthInterval y, double tol) {
  return std::fabs(x.lo - y.lo) <= tol && std::fabs(x.hi - y.hi) <= tol;
}

}  // namespace

TEST_CASE("midpoint and width") {
  CHECK(midpoint({0.2, 0.6}) == doctest::Approx(0.4));
  CHECK(width({0.2, 0.6}) == doctest::Approx(0.4));
  CHECK(width({0.5, 0.5}) == 0.0);
  CHECK(width(kUnknown) == 1.0);
}

TEST_CASE("regularity") {
  CHECK(is_regular({0.0, 1.0}));
  CHECK(is_regular({0.3, 0.3}));
  CHECK(is_regular({0.3, 0.3 - 1e-12}));  // inverted within tolerance
  CHECK_FALSE(is_regular({0.6, 0.4}));
  CHECK_FALSE(is_regular({-0.1, 0.5}));
  CHECK_FALSE(is_regular({0.5, 1.1}));
  CHECK_FALSE(is_regular(contradiction()));
}

TEST_CASE("truth order compares midpoints") {
  CHECK(truth_le({0.1, 0.3}, {0.2, 0.4}));
  CHECK(truth_le({0.0, 1.0}, {0.5, 0.5}));  // equal midpoints
  CHECK(truth_le({0.5, 0.5}, {0.0, 1.0}));
  CHECK_FALSE(truth_lt({0.0, 1.0}, {0.5, 0.5}));
  CHECK(truth_lt({0.1, 0.3}, {0.5, 0.7}));
}

TEST_CASE("knowledge order compares widths, wider is below") {
  CHECK(knowledge_le(kUnknown, {0.3, 0.4}));
  CHECK_FALSE(knowledge_le({0.3, 0.4}, kUnknown));
  CHECK(knowledge_le({0.1, 0.3}, {0.6, 0.8}));  // equal widths, both directions
  CHECK(knowledge_le({0.6, 0.8}, {0.1, 0.3}));
  CHECK(knowledge_lt(kUnknown, {0.5, 0.5}));
}

TEST_CASE("connective values") {
  CHECK(close(tnorm({0.75, 0.9}, {0.8, 0.9}), {0.6, 0.81}, 1e-15));
  CHECK(close(tnorm({0.7, 0.9}, {0.6, 0.81}), {0.42, 0.729}, 1e-15));
  CHECK(tconorm({0.2, 0.84}, {0.0, 0.0}) == TruthInterval{0.2, 0.84});
  CHECK(close(tconorm({0.36, 0.81}, {0.0, 1.0}), {0.36, 1.0}, 1e-15));
  CHECK(close(cneg({0.2, 0.84}), {0.16, 0.8}, 1e-15));
  CHECK(cneg(kUnknown) == kUnknown);
  CHECK(naf({0.3, 0.7}) == TruthInterval{0.7, 0.7});
  CHECK(naf(kUnknown) == TruthInterval{1.0, 1.0});
  CHECK(naf({1.0, 1.0}) == TruthInterval{0.0, 0.0});
}

TEST_CASE("evidence aggregation keeps the narrower operand") {
  CHECK(k_aggregate({0.3, 0.4}, kUnknown) == TruthInterval{0.3, 0.4});
  CHECK(k_aggregate(kUnknown, {0.3, 0.4}) == TruthInterval{0.3, 0.4});
  CHECK(k_aggregate({0.2, 0.2}, {0.2, 0.2}) == TruthInterval{0.2, 0.2});
}

TEST_CASE("evidence aggregation flags irreconcilable ties") {
  TruthInterval c = k_aggregate({0.2, 0.2}, {0.8, 0.8});
  CHECK_FALSE(is_regular(c));
  CHECK(c == contradiction());
  // equal widths, shifted values
  CHECK_FALSE(is_regular(k_aggregate({0.1, 0.3}, {0.2, 0.4})));
  // irregular operands poison the result
  CHECK(k_aggregate(contradiction(), {0.5, 0.5}) == contradiction());
  CHECK(k_aggregate({0.5, 0.5}, contradiction()) == contradiction());
}

TEST_CASE("interval distances") {
  CHECK(interval_distance({0.2, 0.6}, {0.2, 0.6}) == 0.0);
  CHECK(interval_distance({0.2, 0.6}, {0.2, 0.6}, DistanceVariant::WidthMean) ==
        doctest::Approx(0.4));
  CHECK(interval_distance({0.0, 0.0}, {1.0, 1.0}) == doctest::Approx(1.0));
  CHECK(interval_distance({0.0, 0.5}, {0.25, 0.75}) == doctest::Approx(0.25));
}

TEST_CASE("connective laws on random samples") {
  Rng rng(7);
  for (int i = 0; i < 2000; ++i) {
    TruthInterval x = random_regular(rng);
    TruthInterval y = random_regular(rng);
    TruthInterval z = random_regular(rng);

    CHECK(close(tnorm(x, y), tnorm(y, x), 1e-12));
    CHECK(close(tconorm(x, y), tconorm(y, x), 1e-12));
    CHECK(close(tnorm(tnorm(x, y), z), tnorm(x, tnorm(y, z)), 1e-12));
    CHECK(close(tconorm(tconorm(x, y), z), tconorm(x, tconorm(y, z)), 1e-12));
    CHECK(close(tnorm(x, {1.0, 1.0}), x, 1e-12));
    CHECK(close(tconorm(x, {0.0, 0.0}), x, 1e-12));
    CHECK(close(cneg(cneg(x)), x, 1e-12));
    CHECK(close(cneg(tnorm(x, y)), tconorm(cneg(x), cneg(y)), 1e-12));
    CHECK(close(cneg(tconorm(x, y)), tnorm(cneg(x), cneg(y)), 1e-12));

    // componentwise monotonicity
    TruthInterval x2{std::min(1.0, x.lo + 0.1), std::min(1.0, x.hi + 0.1)};
    TruthInterval tn = tnorm(x, y);
    TruthInterval tn2 = tnorm(x2, y);
    CHECK(tn.lo <= tn2.lo + 1e-12);
    CHECK(tn.hi <= tn2.hi + 1e-12);
    TruthInterval tc = tconorm(x, y);
    TruthInterval tc2 = tconorm(x2, y);
    CHECK(tc.lo <= tc2.lo + 1e-12);
    CHECK(tc.hi <= tc2.hi + 1e-12);

    // results stay regular
    CHECK(is_regular(tnorm(x, y), 1e-12));
    CHECK(is_regular(tconorm(x, y), 1e-12));
    CHECK(is_regular(cneg(x), 1e-12));

    // aggregation is symmetric up to the tie rule
    TruthInterval kxy = k_aggregate(x, y);
    TruthInterval kyx = k_aggregate(y, x);
    if (std::fabs(width(x) - width(y)) > 1e-6) {
      CHECK(kxy == kyx);
    }

    // endpoint-mean distance is a metric
    double dxy = interval_distance(x, y);
    double dyx = interval_distance(y, x);
    double dxz = interval_distance(x, z);
    double dzy = interval_distance(z, y);
    CHECK(dxy == doctest::Approx(dyx).epsilon(1e-12));
    CHECK(interval_distance(x, x) == 0.0);
    CHECK(dxy <= dxz + dzy + 1e-12);
  }
}

TEST_CASE("knowledge order is a total preorder on samples") {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    TruthInterval x = random_regular(rng);
    TruthInterval y = random_regular(rng);
    TruthInterval z = random_regular(rng);
    CHECK(knowledge_le(x, x));
    CHECK((knowledge_le(x, y) || knowledge_le(y, x)));
    if (knowledge_le(x, y, 0.0) && knowledge_le(y, z, 0.0)) {
      CHECK(knowledge_le(x, z, 1e-12));
    }
  }
}

TEST_CASE("number formatting round-trips") {
  CHECK(format_number(0.7) == "0.7");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(0.0) == "0");
  CHECK(to_string(TruthInterval{0.75, 0.9}) == "[0.75,0.9]");
  CHECK(to_string(contradiction()) == "[1e+06,1e+06]");
}
