#pragma once

#include <map>
#include <set>

#include "unasp/syntax.hpp"

namespace unasp {

// Maps literals to truth intervals. Literals never assigned explicitly are
// fully unknown, i.e. [0,1].
class Interpretation {
 public:
  TruthInterval value(const Literal& l) const {
    auto it = values_.find(l);
    return it == values_.end() ? kUnknown : it->second;
  }

  void set(const Literal& l, TruthInterval v) { values_[l] = v; }

  const std::map<Literal, TruthInterval>& values() const { return values_; }

  friend bool operator==(const Interpretation&, const Interpretation&) = default;

 private:
  std::map<Literal, TruthInterval> values_;
};

// An interpretation is inconsistent when any literal carries an irregular
// value.
bool is_inconsistent(const Interpretation& i, double eps = kEps);

// Atoms whose positive or negative literal carries an irregular value.
std::set<Atom> irregular_atoms(const Interpretation& i, double eps = kEps);

TruthInterval element_value(const Interpretation& i, const BodyElement& e);

// Product-conjunction of the element values; [1,1] for an empty body. Any
// irregular element value poisons the whole body to the contradiction
// sentinel.
TruthInterval body_value(const Interpretation& i, const std::vector<BodyElement>& body,
                         double eps = kEps, double xi = kContradictionValue);

// A rule is satisfied when the head value matches the weighted body value,
// or exceeds it strictly in either knowledge or truth order.
bool satisfies(const Interpretation& i, const Rule& r, double eps = kEps,
               double xi = kContradictionValue);

// Largest componentwise deviation between the two interpretations over the
// given literals.
double max_difference(const Interpretation& a, const Interpretation& b,
                      const std::set<Literal>& literals);

}  // namespace unasp
