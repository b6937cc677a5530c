#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "helpers.hpp"
#include "resplan/plan.hpp"
#include "resplan/plan_io.hpp"
#include "resplan/random_domain.hpp"

using namespace resplan;

namespace {

test::Junction jx;

}  // namespace

TEST_CASE("subplan restricts and keeps the horizon") {
  JointPlan pi1 = jx.plan("A1: F F\nA2: F F\n");
  JointPlan own = subplan(pi1, std::vector<AgentId>{jx.a1});
  REQUIRE(own.coalition() == std::vector<AgentId>{jx.a1});
  REQUIRE(own.sequence(jx.a1) == std::vector<ActionId>{jx.forward, jx.forward});
  REQUIRE(own.horizon() == 2);

  REQUIRE(subplan(pi1, pi1.coalition()) == pi1);
  REQUIRE(complement_subplan(pi1, jx.a1).coalition() == std::vector<AgentId>{jx.a2});
}

TEST_CASE("subplan rejects bad coalitions") {
  JointPlan pi1 = jx.plan("A1: F F\nA2: F F\n");
  REQUIRE_THROWS_AS(subplan(pi1, std::vector<AgentId>{}), ValidationError);
  JointPlan own = subplan(pi1, std::vector<AgentId>{jx.a1});
  REQUIRE_THROWS_AS(subplan(own, std::vector<AgentId>{jx.a2}), ValidationError);
}

TEST_CASE("plan union merges disjoint coalitions") {
  JointPlan a1 = jx.plan("A1: F F\n");
  JointPlan a2 = jx.plan("A2: F F\n");
  JointPlan joined = plan_union(a1, a2);
  REQUIRE(joined == jx.plan("A1: F F\nA2: F F\n"));
  REQUIRE(subplan(joined, a1.coalition()) == a1);
  REQUIRE(subplan(joined, a2.coalition()) == a2);

  REQUIRE_THROWS_AS(plan_union(a1, a1), ValidationError);
  REQUIRE_THROWS_AS(plan_union(a1, jx.plan("A2: F\n")), ValidationError);
}

TEST_CASE("compatibility is containment plus agreement") {
  JointPlan pi1 = jx.plan("A1: F F\nA2: F F\n");
  REQUIRE(is_compatible(jx.plan("A1: F F\n"), pi1));
  REQUIRE(is_compatible(pi1, pi1));
  REQUIRE_FALSE(is_compatible(jx.plan("A1: F\n"), pi1));          // horizon mismatch
  REQUIRE_FALSE(is_compatible(jx.plan("A1: F skip\n"), pi1));     // disagreement
  REQUIRE_FALSE(is_compatible(pi1, jx.plan("A1: F F\n")));        // not a superset
}

TEST_CASE("restriction and union round-trip") {
  detail::SplitMix64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    int k = static_cast<int>(rng.below(3)) + 1;
    std::vector<std::vector<ActionId>> seqs(2);
    for (auto& s : seqs) {
      for (int t = 0; t < k; ++t) s.push_back(static_cast<ActionId>(rng.below(2)));
    }
    JointPlan plan({jx.a1, jx.a2}, seqs, k);
    for (AgentId j : {jx.a1, jx.a2}) {
      JointPlan left = subplan(plan, std::vector<AgentId>{j});
      JointPlan right = complement_subplan(plan, j);
      REQUIRE(plan_union(left, right) == plan);
      REQUIRE(is_compatible(left, plan));
      REQUIRE(is_compatible(right, plan));
    }
  }
}

TEST_CASE("enumeration counts match the action-space size exactly") {
  // 2 agents x 2 actions: 4^k full plans.
  REQUIRE(PlanEnumerator(nullptr, 1, jx.ppd.vocab).count() == 4);
  REQUIRE(PlanEnumerator(nullptr, 2, jx.ppd.vocab).count() == 16);
  JointPlan partial = jx.plan("A1: F F\n");
  REQUIRE(PlanEnumerator(&partial, 2, jx.ppd.vocab).count() == 4);
  JointPlan full = jx.plan("A1: F F\nA2: skip F\n");
  REQUIRE(PlanEnumerator(&full, 2, jx.ppd.vocab).count() == 1);
  REQUIRE(PlanEnumerator(nullptr, 0, jx.ppd.vocab).count() == 1);
}

TEST_CASE("enumeration is exhaustive, duplicate-free and lexicographic") {
  JointPlan partial = jx.plan("A1: F F\n");
  std::set<std::uint64_t> seen;
  std::uint64_t previous = 0;
  bool first = true;
  int visited = 0;
  for (PlanEnumerator en(&partial, 2, jx.ppd.vocab); !en.done(); en.advance()) {
    const JointPlan& plan = en.current();
    REQUIRE(is_compatible(partial, plan));
    REQUIRE(plan.covers_all(jx.ppd.vocab));
    std::uint64_t code = plan_code(plan, jx.ppd.vocab);
    REQUIRE(code == en.current_code());
    REQUIRE(seen.insert(code).second);
    if (!first) REQUIRE(previous < code);
    previous = code;
    first = false;
    ++visited;
  }
  REQUIRE(visited == 4);

  // Unconstrained: slowest-varying digit is the first agent's first step.
  PlanEnumerator en(nullptr, 1, jx.ppd.vocab);
  REQUIRE(en.current().action(jx.a1, 0) == kSkipAction);
  REQUIRE(en.current().action(jx.a2, 0) == kSkipAction);
  en.advance();
  REQUIRE(en.current().action(jx.a1, 0) == kSkipAction);
  REQUIRE(en.current().action(jx.a2, 0) == jx.forward);
  en.advance();
  REQUIRE(en.current().action(jx.a1, 0) == jx.forward);
  REQUIRE(en.current().action(jx.a2, 0) == kSkipAction);
}

TEST_CASE("horizon-zero enumeration yields exactly the empty plan") {
  int visited = 0;
  for (PlanEnumerator en(nullptr, 0, jx.ppd.vocab); !en.done(); en.advance()) {
    REQUIRE(en.current().horizon() == 0);
    ++visited;
  }
  REQUIRE(visited == 1);
}

TEST_CASE("plan files parse, reorder and reprint canonically") {
  JointPlan plan = parse_plan("# comment\nA2: F skip\nA1: skip F # trailing\n", jx.ppd.vocab);
  REQUIRE(plan.coalition() == std::vector<AgentId>({jx.a1, jx.a2}));
  REQUIRE(plan.sequence(jx.a2) == std::vector<ActionId>({jx.forward, kSkipAction}));
  REQUIRE(format_plan(plan, jx.ppd.vocab) == "A1: skip F\nA2: F skip\n");
  REQUIRE(parse_plan(format_plan(plan, jx.ppd.vocab), jx.ppd.vocab) == plan);
}

TEST_CASE("plan file validation errors") {
  REQUIRE_THROWS_AS(parse_plan("A1: F\nA2: F F\n", jx.ppd.vocab), ValidationError);
  REQUIRE_THROWS_AS(parse_plan("A1: F\nA1: F\n", jx.ppd.vocab), ValidationError);
  REQUIRE_THROWS_AS(parse_plan("A9: F\n", jx.ppd.vocab), ValidationError);
  REQUIRE_THROWS_AS(parse_plan("A1: dance\n", jx.ppd.vocab), ValidationError);
  REQUIRE_THROWS_AS(parse_plan("# nothing\n", jx.ppd.vocab), ValidationError);
}
