#include "unasp/interval.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>

namespace unasp {

TruthInterval contradiction(double xi) { return {xi, xi}; }

double midpoint(TruthInterval x) { return (x.lo + x.hi) / 2.0; }

double width(TruthInterval x) { return x.hi - x.lo; }

bool approx_equal(TruthInterval x, TruthInterval y, double eps) {
  return std::fabs(x.lo - y.lo) <= eps && std::fabs(x.hi - y.hi) <= eps;
}

bool is_regular(TruthInterval x, double eps) {
  return x.lo >= -eps && x.hi <= 1.0 + eps && x.lo <= x.hi + eps;
}

bool truth_le(TruthInterval x, TruthInterval y, double eps) {
  return midpoint(x) <= midpoint(y) + eps;
}

bool truth_lt(TruthInterval x, TruthInterval y, double eps) {
  return midpoint(x) < midpoint(y) - eps;
}

bool knowledge_le(TruthInterval x, TruthInterval y, double eps) {
  return width(y) <= width(x) + eps;
}

bool knowledge_lt(TruthInterval x, TruthInterval y, double eps) {
  return width(y) < width(x) - eps;
}

TruthInterval tnorm(TruthInterval x, TruthInterval y) {
  return {x.lo * y.lo, x.hi * y.hi};
}

TruthInterval tconorm(TruthInterval x, TruthInterval y) {
  return {x.lo + y.lo - x.lo * y.lo, x.hi + y.hi - x.hi * y.hi};
}

TruthInterval cneg(TruthInterval x) { return {1.0 - x.hi, 1.0 - x.lo}; }

TruthInterval naf(TruthInterval x) { return {1.0 - x.lo, 1.0 - x.lo}; }

TruthInterval k_aggregate(TruthInterval x, TruthInterval y, double eps, double xi) {
  if (!is_regular(x, eps) || !is_regular(y, eps)) return contradiction(xi);
  if (width(x) < width(y) - eps) return x;
  if (width(y) < width(x) - eps) return y;
  if (approx_equal(x, y, eps)) return x;
  return contradiction(xi);
}

double interval_distance(TruthInterval x, TruthInterval y, DistanceVariant variant) {
  switch (variant) {
    case DistanceVariant::WidthMean:
      return (std::fabs(x.lo - x.hi) + std::fabs(y.lo - y.hi)) / 2.0;
    case DistanceVariant::EndpointMean:
    default:
      return (std::fabs(x.lo - y.lo) + std::fabs(x.hi - y.hi)) / 2.0;
  }
}

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string to_string(TruthInterval x) {
  return "[" + format_number(x.lo) + "," + format_number(x.hi) + "]";
}

}  // namespace unasp
