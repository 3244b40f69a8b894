#pragma once

#include <string>

namespace unasp {

// Absolute tolerance for every floating point comparison in the library.
inline constexpr double kEps = 1e-9;

// Sentinel endpoint marking a contradictory truth value; any value this far
// outside [0,1] is treated as irregular.
inline constexpr double kContradictionValue = 1e6;

// Closed interval of truth degrees. The midpoint carries the degree of
// truth, the width carries the degree of uncertainty.
struct TruthInterval {
  double lo = 0.0;
  double hi = 1.0;

  friend bool operator==(const TruthInterval&, const TruthInterval&) = default;
};

// Total absence of knowledge: the widest regular interval.
inline constexpr TruthInterval kUnknown{0.0, 1.0};

TruthInterval contradiction(double xi = kContradictionValue);

double midpoint(TruthInterval x);
double width(TruthInterval x);

bool approx_equal(TruthInterval x, TruthInterval y, double eps = kEps);

// Regular intervals are the well formed truth values: lo <= hi and both
// endpoints inside [0,1], up to eps.
bool is_regular(TruthInterval x, double eps = kEps);

// Truth preorder: orders intervals by midpoint.
bool truth_le(TruthInterval x, TruthInterval y, double eps = kEps);
bool truth_lt(TruthInterval x, TruthInterval y, double eps = kEps);

// Knowledge preorder: a narrower interval carries more knowledge, so
// knowledge_le(x, y) holds when y is at most as wide as x.
bool knowledge_le(TruthInterval x, TruthInterval y, double eps = kEps);
bool knowledge_lt(TruthInterval x, TruthInterval y, double eps = kEps);

// Product conjunction and its dual disjunction, applied endpoint-wise.
TruthInterval tnorm(TruthInterval x, TruthInterval y);
TruthInterval tconorm(TruthInterval x, TruthInterval y);

// Strong negation: reflects the interval around 1/2.
TruthInterval cneg(TruthInterval x);

// Negation as failure: collapses to the point interval at 1 - lo, the most
// optimistic reading of "x is not derivable".
TruthInterval naf(TruthInterval x);

// Combines two evidence values for the same literal by keeping the more
// informative one. Equally wide but different values cannot be reconciled
// and yield the contradiction sentinel, as does any irregular operand.
TruthInterval k_aggregate(TruthInterval x, TruthInterval y, double eps = kEps,
                          double xi = kContradictionValue);

enum class DistanceVariant {
  // Mean absolute difference of the endpoints; a metric on intervals.
  EndpointMean,
  // Mean of the two widths; ignores where the intervals sit.
  WidthMean,
};

double interval_distance(TruthInterval x, TruthInterval y,
                         DistanceVariant variant = DistanceVariant::EndpointMean);

// Shortest decimal form that round-trips through a double.
std::string format_number(double v);

// "[lo,hi]" with round-tripping endpoints.
std::string to_string(TruthInterval x);

}  // namespace unasp
