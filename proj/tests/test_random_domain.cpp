#include <catch2/catch_amalgamated.hpp>

#include "resplan/domain_io.hpp"
#include "resplan/random_domain.hpp"
#include "resplan/search.hpp"

using namespace resplan;

TEST_CASE("regeneration from the same seed is bit-identical") {
  DomainBounds bounds{2, 2, 2, 2, 0.5, 2, 1};
  Ppd first = random_ppd(bounds);
  Ppd second = random_ppd(bounds);
  REQUIRE(serialize_domain(first) == serialize_domain(second));
  REQUIRE(first.init == second.init);
  REQUIRE(first.epistemic == second.epistemic);

  DomainBounds other = bounds;
  other.rng_seed = 2;
  // Different seeds should not reproduce the same domain text in general;
  // check a few to avoid flaking on a coincidence.
  bool any_difference = false;
  for (std::uint64_t seed = 2; seed < 8 && !any_difference; ++seed) {
    other.rng_seed = seed;
    any_difference = serialize_domain(random_ppd(other)) != serialize_domain(first);
  }
  REQUIRE(any_difference);
}

TEST_CASE("generated domains satisfy the structural invariants") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    DomainBounds bounds;
    bounds.rng_seed = seed;
    Ppd ppd = random_ppd(bounds);
    REQUIRE_NOTHROW(ppd.validate());
    REQUIRE(ppd.vocab.agent_count() >= 1);
    REQUIRE(ppd.vocab.agent_count() <= bounds.max_agents);
    REQUIRE(ppd.vocab.prop_count() >= 1);
    REQUIRE(ppd.vocab.prop_count() <= bounds.max_props);
    REQUIRE(ppd.vocab.action_count() >= 1);
    REQUIRE(ppd.vocab.action_count() <= bounds.max_actions);
    for (AgentId i = 0; i < ppd.vocab.agent_count(); ++i) {
      REQUIRE(ppd.epistemic_for(i).size() <= 3);  // init plus at most 2 extras
    }
    // Serialized form must replay through the domain file pipeline.
    Ppd reparsed = parse_domain(serialize_domain(ppd)).ppd;
    REQUIRE(serialize_domain(reparsed) == serialize_domain(ppd));
  }
}

TEST_CASE("zero effect density makes every state-outcome constant across plans") {
  DomainBounds bounds;
  bounds.effect_density = 0.0;
  bounds.rng_seed = 9;
  Ppd ppd = random_ppd(bounds);
  REQUIRE(ppd.theory.empty());
  detail::SplitMix64 rng(123);
  int checked = 0;
  while (checked < 20) {
    Formula omega = random_outcome(rng, ppd.vocab, 3);
    bool mentions_actions = false;
    for (const auto& n : omega.nodes()) mentions_actions |= n.kind == NodeKind::Does;
    if (mentions_actions) continue;  // do-atoms still vary across plans
    ++checked;
    Verdict v = is_inevitable(omega, ppd.init, 2, ppd.theory, ppd.vocab);
    Formula neg = Formula::negation(omega);
    Verdict nv = is_inevitable(neg, ppd.init, 2, ppd.theory, ppd.vocab);
    // With no effects every history carries the constant state sequence, so
    // either omega or its negation holds on all of them.
    REQUIRE((v.holds || nv.holds));
  }
}

TEST_CASE("corpus items are deterministic and carry full-coverage plans") {
  DomainBounds bounds;
  CorpusItem a = make_corpus_item(bounds, 42);
  CorpusItem b = make_corpus_item(bounds, 42);
  REQUIRE(serialize_domain(a.ppd) == serialize_domain(b.ppd));
  REQUIRE(a.omega == b.omega);
  REQUIRE(a.horizon == b.horizon);
  REQUIRE(a.plans.size() == 3);
  for (std::size_t j = 0; j < a.plans.size(); ++j) {
    REQUIRE(a.plans[j] == b.plans[j]);
    REQUIRE(a.plans[j].covers_all(a.ppd.vocab));
    REQUIRE(a.plans[j].horizon() == a.horizon);
  }
}

TEST_CASE("bounds are validated") {
  DomainBounds bounds;
  bounds.max_agents = 0;
  REQUIRE_THROWS_AS(random_ppd(bounds), ValidationError);
  bounds.max_agents = 2;
  bounds.effect_density = 1.5;
  REQUIRE_THROWS_AS(random_ppd(bounds), ValidationError);
}
