#include "doctest.h"
#include "unasp/generator.hpp"
#include "unasp/parser.hpp"
#include "unasp/postulates.hpp"

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

}  // namespace

TEST_CASE("success: incoming rules survive, possibly hedged") {
  Program base = parse_program(kBaseText);
  Program incoming = parse_program(kIncomingText);
  PostulateReport rep = check_success(base, incoming);
  CHECK(rep.status == PostulateStatus::HoldsModified);

  PostulateReport plain = check_success(parse_program("p @ [0.6,0.8]."),
                                        parse_program("q @ [0.3,0.4]."));
  CHECK(plain.status == PostulateStatus::Holds);
}

TEST_CASE("inclusion: the result stays inside the union") {
  PostulateReport rep =
      check_inclusion(parse_program(kBaseText), parse_program(kIncomingText));
  CHECK(rep.status == PostulateStatus::Holds);
}

TEST_CASE("nm-consistency holds when some sub-base is compatible") {
  PostulateReport rep =
      check_nm_consistency(parse_program(kBaseText), parse_program(kIncomingText));
  CHECK(rep.status == PostulateStatus::Holds);
  CHECK_FALSE(rep.sampled);
}

TEST_CASE("nm-consistency premise fails on self-defeating news") {
  Program base = parse_program("p1: a :- u. p2: u @ [0.5,0.9].");
  Program incoming = parse_program("qa: a @ [1,1]. qn: -a @ [1,1].");
  PostulateReport rep = check_nm_consistency(base, incoming);
  CHECK(rep.status == PostulateStatus::PreconditionUnmet);
}

TEST_CASE("fullness: putting a removed rule back breaks consistency") {
  PostulateReport rep =
      check_fullness(parse_program(kBaseText), parse_program(kIncomingText));
  CHECK(rep.status == PostulateStatus::Holds);
}

TEST_CASE("uniformity against a renamed twin") {
  Program base = parse_program(kBaseText);
  Program incoming = parse_program(kIncomingText);
  Program twin = rename_private_atoms(incoming, base);
  PostulateReport rep = check_uniformity(base, incoming, twin);
  CHECK(rep.status == PostulateStatus::Holds);
}

TEST_CASE("uniformity premise rejects observably different programs") {
  Program base = parse_program("b1: a @ [0.3,0.3].");
  Program incoming = parse_program("n1: -a @ [0.3,0.3].");  // conflicts with the base
  Program other = parse_program("n1: z @ [0.5,0.5].");      // conflicts with nothing
  PostulateReport rep = check_uniformity(base, incoming, other);
  CHECK(rep.status == PostulateStatus::PreconditionUnmet);
}

TEST_CASE("renaming touches only atoms the reference does not know") {
  Program base = parse_program(kBaseText);
  Program incoming = parse_program(kIncomingText);
  Program twin = rename_private_atoms(incoming, base);
  std::set<std::string> keys;
  for (const auto& a : twin.atom_base()) keys.insert(atom_key(a));
  CHECK(keys == std::set<std::string>{"p", "t", "a_alt", "b_alt", "c_alt", "d_alt"});
}

TEST_CASE("component split separates independent rule clusters") {
  auto [q1, q2] = split_by_components(parse_program(kIncomingText));
  CHECK(q1.rule_ids() == std::set<std::string>{"r21", "r22", "r23", "r24", "r26"});
  CHECK(q2.rule_ids() == std::set<std::string>{"r25"});

  auto [b1, b2] = split_by_components(parse_program(kBaseText));
  CHECK(b1.size() == 5);  // everything is connected through p, q, r, s, t
  CHECK(b2.empty());
}

TEST_CASE("weak disjunction with an empty second block") {
  Program base = parse_program(kBaseText);
  Program incoming = parse_program(kIncomingText);
  PostulateReport rep = check_weak_disjunction(base, Program{}, incoming);
  // hedging couples the blocks, but the removed sets still agree
  CHECK(rep.status == PostulateStatus::HoldsModified);
}

TEST_CASE("weak disjunction on independent blocks") {
  Program block1 = parse_program("pa: m :- v. pb: v @ [0.4,0.6].");
  Program block2 = parse_program("pc: w :- z. pd: z @ [0.35,0.65].");
  Program incoming = parse_program(
      "qa: -m :- g.\n"
      "qb: g @ [0.5,0.7].\n"
      "qc: -w :- h.\n"
      "qd: h @ [0.45,0.75].\n");
  PostulateReport rep = check_weak_disjunction(block1, block2, incoming);
  CHECK(rep.status == PostulateStatus::Holds);
}

TEST_CASE("weak disjunction refuses interacting blocks") {
  Program block1 = parse_program("pa: m :- v.");
  Program block2 = parse_program("pb: v @ [0.4,0.6].");
  PostulateReport rep =
      check_weak_disjunction(block1, block2, parse_program("qa: -m @ [0.45,0.65]."));
  CHECK(rep.status == PostulateStatus::PreconditionUnmet);
}

TEST_CASE("weak parallelism on cleanly split news") {
  Program base = parse_program(
      "pa: m :- v.\n"
      "pb: v @ [0.4,0.6].\n"
      "pc: w :- z.\n"
      "pd: z @ [0.35,0.65].\n");
  Program q1 = parse_program("qa: -m :- g. qb: g @ [0.5,0.7].");
  Program q2 = parse_program("qc: -w :- h. qd: h @ [0.45,0.75].");
  PostulateReport rep = check_weak_parallelism(base, q1, q2);
  CHECK(rep.status == PostulateStatus::Holds);
}

TEST_CASE("weak parallelism refuses coupled splits") {
  Program base = parse_program(kBaseText);
  auto [q1, q2] = split_by_components(parse_program(kIncomingText));
  PostulateReport rep = check_weak_parallelism(base, q1, q2);
  // r14 reaches t, which belongs to the second block, while p stays in the first
  CHECK(rep.status == PostulateStatus::PreconditionUnmet);
}

TEST_CASE("the full battery never reports a violation on a sound pair") {
  Program base = parse_program(kBaseText);
  Program incoming = parse_program(kIncomingText);
  auto reports = check_all(base, incoming, std::nullopt, {}, 17);
  REQUIRE(reports.size() == 7);
  for (const auto& r : reports) {
    CHECK(r.status != PostulateStatus::Violated);
  }
}

TEST_CASE("generated pairs are deterministic per seed") {
  GeneratorOptions opts;
  Rng a(42);
  Rng b(42);
  auto [p1, q1] = generate_revision_pair(opts, a);
  auto [p2, q2] = generate_revision_pair(opts, b);
  CHECK(to_string(p1) == to_string(p2));
  CHECK(to_string(q1) == to_string(q2));
  Rng c(43);
  auto [p3, q3] = generate_revision_pair(opts, c);
  CHECK(to_string(p1) != to_string(p3));
}

TEST_CASE("generated programs respect their bounds") {
  GeneratorOptions opts;
  opts.atoms = 4;
  opts.rules = 10;
  Rng rng(7);
  Program p = generate_program(opts, rng);
  CHECK(p.size() == 10);
  CHECK(p.atom_base().size() <= 4);
  for (const auto& r : p.rules()) {
    CHECK(is_regular(r.weight));
    CHECK(r.body.size() <= 3);
  }
}
