#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "resplan/formula.hpp"
#include "resplan/random_domain.hpp"

using namespace resplan;

TEST_CASE("builders produce children-first node layouts") {
  Formula f = Formula::conj(Formula::negation(Formula::prop(0)), Formula::prop(1));
  for (int i = 0; i < f.size(); ++i) {
    const auto& n = f.node(i);
    if (n.kind == NodeKind::Prop || n.kind == NodeKind::Does) continue;
    if (n.a >= 0) REQUIRE(n.a < i);
    if (n.b >= 0) REQUIRE(n.b < i);
  }
  REQUIRE(f.node(f.root()).kind == NodeKind::And);
}

TEST_CASE("structural equality distinguishes shapes and atoms") {
  Formula a = Formula::conj(Formula::prop(0), Formula::prop(1));
  Formula b = Formula::conj(Formula::prop(0), Formula::prop(1));
  Formula c = Formula::conj(Formula::prop(1), Formula::prop(0));
  REQUIRE(a == b);
  REQUIRE_FALSE(a == c);
  REQUIRE_FALSE(Formula::does(0, 1) == Formula::does(0, 0));
  REQUIRE(Formula::constant(true) == Formula::constant(true));
  REQUIRE_FALSE(Formula::constant(true) == Formula::constant(false));
}

TEST_CASE("is_propositional flags temporal operators only") {
  REQUIRE(Formula::implies(Formula::prop(0), Formula::constant(false)).is_propositional());
  REQUIRE_FALSE(Formula::next(Formula::prop(0)).is_propositional());
  REQUIRE_FALSE(Formula::until(Formula::constant(true), Formula::prop(0)).is_propositional());
  REQUIRE_FALSE(Formula::globally(Formula::prop(0)).is_propositional());
}

TEST_CASE("validate rejects out-of-range symbols") {
  test::Junction jx;
  REQUIRE_THROWS_AS(Formula::prop(99).validate(jx.ppd.vocab), ValidationError);
  REQUIRE_THROWS_AS(Formula::does(5, 0).validate(jx.ppd.vocab), ValidationError);
  REQUIRE_THROWS_AS(Formula::does(0, 9).validate(jx.ppd.vocab), ValidationError);
  REQUIRE_NOTHROW(Formula::does(jx.a2, jx.forward).validate(jx.ppd.vocab));
}

TEST_CASE("printing round-trips through the parser") {
  test::Junction jx;
  for (const char* text : {
           "G !collision",
           "F crossed1",
           "!(!crossed2 & do(A2,F)) & !collision",
           "crossed1 -> crossed2 -> collision",
           "(crossed1 -> crossed2) -> collision",
           "crossed1 U crossed2 U collision",
           "(crossed1 U crossed2) U collision",
           "crossed1 & (crossed2 | collision)",
           "X X crossed1 | true U false",
       }) {
    Formula f = jx.ltl(text);
    Formula reparsed = jx.ltl(f.to_string(jx.ppd.vocab));
    INFO(text << "  printed as  " << f.to_string(jx.ppd.vocab));
    REQUIRE(f == reparsed);
  }
}

TEST_CASE("printing round-trips on random formulas") {
  test::Junction jx;
  detail::SplitMix64 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    Formula f = detail::random_ltl_formula(rng, jx.ppd.vocab, 4);
    std::string text = f.to_string(jx.ppd.vocab);
    Formula reparsed = jx.ltl(text);
    INFO(text);
    REQUIRE(f == reparsed);
  }
}
