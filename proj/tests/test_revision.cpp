#include "doctest.h"
#include "unasp/parser.hpp"
#include "unasp/revision.hpp"

using namespace unasp;

namespace {

const char* kBaseText =
    "r11: p :- q, r @ [0.7,0.9].\n"
    "r12: r :- s @ [0.8,0.9].\n"
    "r13: q @ [0.75,0.9].\n"
    "r14: -p :- t.\n"
    "r15: s.\n";

const char* kIncomingText =
    "r21: p :- a, b @ [0.75,0.95].\n"
    "r22: a :- c @ [0.9,1].\n"
    "r23: b @ [0.85,1].\n"
    "r24: -p :- d.\n"
    "r25: t @ [0.2,0.84].\n"
    "r26: d @ [0,0].\n";

Literal lit(const std::string& name, bool negated = false) {
  return {{name, {}}, negated};
}

bool close(TruthInterval x, TruthInterval y, double tol = 1e-9) {
  return approx_equal(x, y, tol);
}

}  // namespace

TEST_CASE("weight hedging widens and clamps") {
  CHECK(update_weight({0.7, 0.9}, 1, 0.1) == TruthInterval{0.6, 1.0});
  CHECK(update_weight({0.05, 0.95}, 2, 0.1) == TruthInterval{0.0, 1.0});
  CHECK(update_weight({0.5, 0.5}, 0, 0.1) == TruthInterval{0.5, 0.5});
}

TEST_CASE("uncertain rules link to complementary heads across programs") {
  Program base = parse_program(kBaseText);
  Program incoming = parse_program(kIncomingText);
  auto links = disposition_links(base, incoming);
  REQUIRE(links.size() == 2);
  CHECK(links[0].rule == "r11");
  CHECK(links[0].exceptions == std::set<std::string>{"r24"});
  CHECK(links[1].rule == "r21");
  CHECK(links[1].exceptions == std::set<std::string>{"r14"});
}

TEST_CASE("the union hedges linked weights and keeps the rest") {
  Program base = parse_program(kBaseText);
  Program incoming = parse_program(kIncomingText);
  Program u = modified_union(base, incoming);
  CHECK(u.size() == 11);
  CHECK(u.find("r11")->weight == TruthInterval{0.6, 1.0});
  CHECK(u.find("r21")->weight == TruthInterval{0.65, 1.0});
  CHECK(u.find("r12")->weight == TruthInterval{0.8, 0.9});
  CHECK(u.find("r11")->origin == RuleOrigin::Base);
  CHECK(u.find("r21")->origin == RuleOrigin::Incoming);
}

TEST_CASE("colliding base labels step aside") {
  Program base = parse_program("r1: a. r2: b @ [0.4,0.6].");
  Program incoming = parse_program("r1: c.");
  Program u = modified_union(base, incoming);
  REQUIRE(u.size() == 3);
  CHECK(u.contains("r1_P"));
  CHECK(u.find("r1_P")->head == lit("a"));
  CHECK(u.find("r1")->head == lit("c"));
}

TEST_CASE("the contradiction set names the conflict on shared atoms") {
  Program base = parse_program(kBaseText);
  Program incoming = parse_program(kIncomingText);
  CHECK(contradiction_set(base, incoming) == std::set<std::string>{"p"});
}

TEST_CASE("every rule feeding the conflicting atom is a candidate") {
  Program base = parse_program(kBaseText);
  Program incoming = parse_program(kIncomingText);
  auto cands = removal_candidates(base, incoming);
  REQUIRE(cands.count("p"));
  std::vector<std::set<std::string>> expected{
      {"r11"}, {"r12"}, {"r13"}, {"r14"}, {"r15"}};
  CHECK(cands.at("p") == expected);
}

TEST_CASE("the least known candidate is removed") {
  Program base = parse_program(kBaseText);
  Program incoming = parse_program(kIncomingText);
  RevisionOutcome o = revise(base, incoming);

  CHECK(o.contradiction_atoms == std::set<std::string>{"p"});
  CHECK(o.removed.rules == std::set<std::string>{"r11"});
  CHECK(o.removed.strategy_step.at("r11") == 1);
  CHECK(o.removed.distance == doctest::Approx(0.3455).epsilon(1e-9));

  CHECK(o.result.size() == 10);
  CHECK_FALSE(o.result.contains("r11"));
  CHECK(o.result.find("r21")->weight == TruthInterval{0.65, 1.0});
  CHECK(o.answer_set.consistent);
  CHECK(close(o.answer_set.values.value(lit("p")), {0.16, 0.8}));
  CHECK(close(o.answer_set.values.value(lit("t")), {0.2, 0.84}));
}

TEST_CASE("a compatible incoming program removes nothing") {
  Program base = parse_program("p @ [0.6,0.8].");
  Program incoming = parse_program("q @ [0.3,0.4].");
  RevisionOutcome o = revise(base, incoming);
  CHECK(o.removed.rules.empty());
  CHECK(o.removed.distance == 0.0);
  CHECK(o.contradiction_atoms.empty());
  CHECK(o.answer_set.consistent);
  CHECK(o.result.size() == 2);
}

TEST_CASE("ties between equally weak rules fall to the distance rule") {
  Program base = parse_program(
      "x0: u @ [0.5,0.7].\n"
      "x1: a :- u.\n"
      "x2: t @ [0.6,0.8].\n"
      "x3: a :- t.\n");
  Program incoming = parse_program(
      "qn: -a :- g.\n"
      "qg: g @ [0.5,0.64].\n");
  RevisionOutcome o = revise(base, incoming);

  CHECK(o.contradiction_atoms == std::set<std::string>{"a"});
  auto& cands = o.candidates.at("a");
  CHECK(cands == std::vector<std::set<std::string>>{{"x0"}, {"x1"}, {"x2"}, {"x3"}});
  CHECK(o.removed.rules == std::set<std::string>{"x0"});
  CHECK(o.removed.strategy_step.at("x0") == 3);
  CHECK(o.removed.distance == doctest::Approx(0.53).epsilon(1e-9));
  CHECK(close(o.answer_set.values.value(lit("a")), {0.36, 0.5}));
}

TEST_CASE("an inconsistent base cannot be repaired by empty news") {
  Program base = parse_program("a @ [0.2,0.2]. -a @ [0.7,0.7].");
  CHECK_THROWS_AS(revise(base, Program{}), RevisionError);
}

TEST_CASE("certain irreconcilable facts admit no removal") {
  Program base = parse_program("p1: a :- u. p2: u @ [0.5,0.9].");
  Program incoming = parse_program("qa: a @ [1,1]. qn: -a @ [1,1].");
  CHECK_THROWS_AS(revise(base, incoming), NoRemovalCandidatesError);
}

TEST_CASE("interpretation distances add up per atom") {
  Interpretation a;
  Interpretation b;
  Atom pa{"a", {}};
  Atom pb{"b", {}};
  a.set({pa, false}, {0.0, 0.0});
  b.set({pa, false}, {0.5, 0.5});
  a.set({pb, false}, {0.0, 0.5});
  b.set({pb, false}, {0.25, 0.75});
  CHECK(interpretation_distance(a, b, {pa, pb}) == doctest::Approx(0.75));
  CHECK(interpretation_distance(a, b, {pa}) == doctest::Approx(0.5));
}

TEST_CASE("answer set collections compare by their largest gap") {
  std::set<Atom> atoms{{"a", {}}, {"b", {}}};
  Interpretation x;
  x.set({{"a", {}}, false}, {0.0, 0.0});
  CHECK(answer_set_distance({}, {}, atoms) == 0.0);
  CHECK(answer_set_distance({x}, {}, atoms) == 2.0);
  CHECK(answer_set_distance({}, {x}, atoms) == 2.0);
  CHECK(answer_set_distance({x}, {x}, atoms) == 0.0);
}
