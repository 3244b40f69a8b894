#pragma once

#include <set>
#include <stdexcept>
#include <string>

#include "unasp/syntax.hpp"

namespace unasp {

class GroundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Constants appearing as arguments anywhere in the program.
std::set<std::string> herbrand_universe(const Program& p);

// Instantiates every rule with variables over the program's constants plus
// extra_constants, in lexicographic order of the bindings. The instance of
// rule "id" under binding X=a, Y=b is labelled "id_a_b" (suffixed further if
// that label is taken). Throws GroundError when a rule has variables but the
// universe is empty.
Program ground(const Program& p, const std::set<std::string>& extra_constants = {});

}  // namespace unasp
