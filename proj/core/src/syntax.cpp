#include "unasp/syntax.hpp"

#include <stdexcept>

namespace unasp {

bool is_variable(const std::string& term) {
  return !term.empty() && ((term[0] >= 'A' && term[0] <= 'Z') || term[0] == '_');
}

bool Atom::ground() const {
  for (const auto& t : args) {
    if (is_variable(t)) return false;
  }
  return true;
}

bool same_shape(const Rule& a, const Rule& b) {
  return a.id == b.id && a.head == b.head && a.body == b.body;
}

Program::Program(std::vector<Rule> rules) {
  for (auto& r : rules) add(std::move(r));
}

void Program::add(Rule rule) {
  if (contains(rule.id)) {
    throw std::invalid_argument("duplicate rule id: " + rule.id);
  }
  rules_.push_back(std::move(rule));
}

bool Program::contains(const std::string& id) const { return find(id) != nullptr; }

const Rule* Program::find(const std::string& id) const {
  for (const auto& r : rules_) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

Program Program::without(const std::set<std::string>& ids) const {
  Program out;
  for (const auto& r : rules_) {
    if (!ids.count(r.id)) out.add(r);
  }
  return out;
}

Program Program::restricted_to(const std::set<std::string>& ids) const {
  Program out;
  for (const auto& r : rules_) {
    if (ids.count(r.id)) out.add(r);
  }
  return out;
}

std::set<std::string> Program::rule_ids() const {
  std::set<std::string> out;
  for (const auto& r : rules_) out.insert(r.id);
  return out;
}

std::set<Atom> Program::atom_base() const {
  std::set<Atom> out;
  for (const auto& r : rules_) {
    out.insert(r.head.atom);
    for (const auto& e : r.body) {
      if (e.kind != ElementKind::Constant) out.insert(e.lit.atom);
    }
  }
  return out;
}

bool Program::ground() const {
  for (const auto& r : rules_) {
    if (!r.head.atom.ground()) return false;
    for (const auto& e : r.body) {
      if (e.kind != ElementKind::Constant && !e.lit.atom.ground()) return false;
    }
  }
  return true;
}

std::string atom_key(const Atom& a) {
  std::string out = a.predicate;
  if (!a.args.empty()) {
    out += "(";
    for (std::size_t i = 0; i < a.args.size(); ++i) {
      if (i) out += ",";
      out += a.args[i];
    }
    out += ")";
  }
  return out;
}

std::string literal_key(const Literal& l) {
  return l.negated ? "-" + atom_key(l.atom) : atom_key(l.atom);
}

std::string to_string(const Atom& a) { return atom_key(a); }

std::string to_string(const Literal& l) { return literal_key(l); }

std::string to_string(const BodyElement& e) {
  switch (e.kind) {
    case ElementKind::Naf:
      return "not " + literal_key(e.lit);
    case ElementKind::Constant:
      return to_string(e.value);
    case ElementKind::Plain:
    default:
      return literal_key(e.lit);
  }
}

std::string to_string(const Rule& r) {
  std::string out = r.id + ": " + literal_key(r.head);
  if (!r.body.empty()) {
    out += " :- ";
    for (std::size_t i = 0; i < r.body.size(); ++i) {
      if (i) out += ", ";
      out += to_string(r.body[i]);
    }
  }
  if (!(r.weight == TruthInterval{1.0, 1.0})) {
    out += " @ " + to_string(r.weight);
  }
  out += ".";
  return out;
}

std::string to_string(const Program& p) {
  std::string out;
  for (const auto& r : p.rules()) {
    out += to_string(r);
    out += "\n";
  }
  return out;
}

}  // namespace unasp
