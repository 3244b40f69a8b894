#include "doctest.h"
#include "unasp/grounder.hpp"
#include "unasp/parser.hpp"

using namespace unasp;

TEST_CASE("basic rules parse") {
  Program p = parse_program(
      "r11: p :- q, r @ [0.7,0.9].\n"
      "r12: r :- s @ [0.8,0.9].\n"
      "r13: q @ [0.75,0.9].\n"
      "r14: -p :- t.\n"
      "r15: s.\n");
  REQUIRE(p.size() == 5);
  const Rule* r11 = p.find("r11");
  REQUIRE(r11 != nullptr);
  CHECK(r11->head == Literal{{"p", {}}, false});
  REQUIRE(r11->body.size() == 2);
  CHECK(r11->body[0].kind == ElementKind::Plain);
  CHECK(r11->body[1].lit == Literal{{"r", {}}, false});
  CHECK(r11->weight == TruthInterval{0.7, 0.9});
  CHECK(p.find("r14")->head.negated);
  CHECK(p.find("r15")->weight == TruthInterval{1.0, 1.0});
  CHECK(p.find("r15")->is_fact());
}

TEST_CASE("body elements: naf, strong negation, constants") {
  Program p = parse_program("a :- not b, -c, [0.3,0.5], not -d.");
  const Rule& r = p.rules()[0];
  REQUIRE(r.body.size() == 4);
  CHECK(r.body[0].kind == ElementKind::Naf);
  CHECK(r.body[0].lit == Literal{{"b", {}}, false});
  CHECK(r.body[1].kind == ElementKind::Plain);
  CHECK(r.body[1].lit.negated);
  CHECK(r.body[2].kind == ElementKind::Constant);
  CHECK(r.body[2].value == TruthInterval{0.3, 0.5});
  CHECK(r.body[3].kind == ElementKind::Naf);
  CHECK(r.body[3].lit.negated);
}

TEST_CASE("terms and the alternative arrow") {
  Program p = parse_program("edge(a,b). path(X,Y) <- edge(X,Y) @ [0.9,1].");
  CHECK(p.rules()[0].head.atom.args == std::vector<std::string>{"a", "b"});
  CHECK(p.rules()[0].head.atom.ground());
  CHECK_FALSE(p.rules()[1].head.atom.ground());
  CHECK(p.rules()[1].weight == TruthInterval{0.9, 1.0});
}

TEST_CASE("unlabelled rules are numbered around taken labels") {
  Program p = parse_program("a. r2: b. c. d.");
  CHECK(p.rules()[0].id == "r1");
  CHECK(p.rules()[1].id == "r2");
  CHECK(p.rules()[2].id == "r3");
  CHECK(p.rules()[3].id == "r4");
}

TEST_CASE("comments and whitespace are skipped") {
  Program p = parse_program("% header\n  a :- b. % trailing\n\n% tail");
  CHECK(p.size() == 1);
}

TEST_CASE("implication wins over label when both could apply") {
  Program p = parse_program("foo:-p.");
  CHECK(p.rules()[0].id == "r1");
  CHECK(p.rules()[0].head == Literal{{"foo", {}}, false});
  Program q = parse_program("foo: -p.");
  CHECK(q.rules()[0].id == "foo");
  CHECK(q.rules()[0].head.negated);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_program("a :- b"), ParseError);
  try {
    parse_program("a.\nx: b.\nx: c.");
    FAIL("expected a duplicate label error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.col() == 1);
  }
  try {
    parse_program("a @ [0.5, 1.2].");
    FAIL("expected a weight range error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.col() == 5);
  }
  CHECK_THROWS_AS(parse_program("a @ [0.9,0.1]."), ParseError);
  CHECK_THROWS_AS(parse_program("a :- [-0.2,0.5]."), ParseError);
  CHECK_THROWS_AS(parse_program("a :- , b."), ParseError);
}

TEST_CASE("printing round-trips") {
  std::string text =
      "r11: p :- q, r @ [0.7,0.9].\n"
      "r12: r :- not s, [0.25,0.5] @ [0.8,0.9].\n"
      "r13: -q(a,b).\n"
      "r14: s @ [0.05,1].\n";
  Program p = parse_program(text);
  CHECK(to_string(p) == text);
  Program q = parse_program(to_string(p));
  CHECK(to_string(q) == text);
}

TEST_CASE("grounding instantiates variables over the universe") {
  Program p = parse_program(
      "f: edge(a,b).\n"
      "g: edge(b,c).\n"
      "path(X) :- edge(X,b) @ [0.9,1].\n");
  CHECK_FALSE(p.ground());
  Program g = ground(p);
  CHECK(g.ground());
  // constants a, b, c give three instances of path(X)
  CHECK(g.size() == 5);
  CHECK(g.contains("r1_a"));
  CHECK(g.contains("r1_b"));
  CHECK(g.contains("r1_c"));
  CHECK(g.find("r1_a")->head == Literal{{"path", {"a"}}, false});

  Program extra = ground(p, {"d"});
  CHECK(extra.size() == 6);

  Program loose = parse_program("p(X) :- q(X).");
  CHECK_THROWS_AS(ground(loose), GroundError);
}

TEST_CASE("variables are detected per argument") {
  CHECK(is_variable("X"));
  CHECK(is_variable("_tmp"));
  CHECK_FALSE(is_variable("x"));
  CHECK_FALSE(is_variable("42"));
}
