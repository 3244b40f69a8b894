#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "unasp/interval.hpp"

namespace unasp {

// Terms starting with an upper case letter or underscore are variables.
bool is_variable(const std::string& term);

struct Atom {
  std::string predicate;
  std::vector<std::string> args;

  bool ground() const;
  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

// An atom or its strong negation.
struct Literal {
  Atom atom;
  bool negated = false;

  Literal complement() const { return {atom, !negated}; }
  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

enum class ElementKind {
  Plain,     // literal evaluated as stated
  Naf,       // literal under negation as failure
  Constant,  // fixed truth interval
};

struct BodyElement {
  ElementKind kind = ElementKind::Plain;
  Literal lit;
  TruthInterval value = kUnknown;  // only read when kind == Constant

  friend bool operator==(const BodyElement&, const BodyElement&) = default;
};

enum class RuleOrigin {
  Base,      // from the program being revised
  Incoming,  // from the newly accepted program
};

struct Rule {
  std::string id;
  Literal head;
  std::vector<BodyElement> body;
  TruthInterval weight{1.0, 1.0};
  RuleOrigin origin = RuleOrigin::Base;

  bool is_fact() const { return body.empty(); }
  friend bool operator==(const Rule&, const Rule&) = default;
};

// True when the rules agree on everything except possibly the weight.
bool same_shape(const Rule& a, const Rule& b);

// An ordered collection of uniquely labelled rules. Insertion order is
// semantically relevant: it drives the naming and layout of the
// transformed program.
class Program {
 public:
  Program() = default;
  explicit Program(std::vector<Rule> rules);

  // Throws std::invalid_argument on a duplicate rule id.
  void add(Rule rule);

  const std::vector<Rule>& rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }
  bool empty() const { return rules_.empty(); }

  bool contains(const std::string& id) const;
  const Rule* find(const std::string& id) const;

  // Copy of this program with the given rules dropped.
  Program without(const std::set<std::string>& ids) const;

  // Copy restricted to the given rules, preserving order.
  Program restricted_to(const std::set<std::string>& ids) const;

  std::set<std::string> rule_ids() const;
  std::set<Atom> atom_base() const;
  bool ground() const;

 private:
  std::vector<Rule> rules_;
};

// Canonical text keys, also used for JSON maps: "p(a,b)", "-p(a,b)".
std::string atom_key(const Atom& a);
std::string literal_key(const Literal& l);

std::string to_string(const Atom& a);
std::string to_string(const Literal& l);
std::string to_string(const BodyElement& e);
// "id: head :- e1, e2 @ [lo,hi]." with the weight omitted when it is [1,1].
std::string to_string(const Rule& r);
// One rule per line, in program order.
std::string to_string(const Program& p);

}  // namespace unasp
