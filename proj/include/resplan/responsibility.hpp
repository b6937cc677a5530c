#pragma once

#include <optional>
#include <vector>

#include "resplan/search.hpp"

namespace resplan {

enum class ResponsibilityKind { Car, Cpr, Ccr, Aar };

inline const char* kind_name(ResponsibilityKind k) {
  switch (k) {
    case ResponsibilityKind::Car: return "CAR";
    case ResponsibilityKind::Cpr: return "CPR";
    case ResponsibilityKind::Ccr: return "CCR";
    default: return "AAR";
  }
}

inline std::optional<ResponsibilityKind> parse_kind(std::string_view s) {
  if (s == "CAR") return ResponsibilityKind::Car;
  if (s == "CPR") return ResponsibilityKind::Cpr;
  if (s == "CCR") return ResponsibilityKind::Ccr;
  if (s == "AAR") return ResponsibilityKind::Aar;
  return std::nullopt;
}

namespace detail {

// Coalitions containing `member`, ordered by increasing size and then
// lexicographically by member list. The order fixes which coalition a
// contributive-responsibility verdict reports.
inline std::vector<std::vector<AgentId>> coalitions_containing(AgentId member, int agent_count) {
  std::vector<std::vector<AgentId>> out;
  for (unsigned mask = 0; mask < (1u << agent_count); ++mask) {
    if (!(mask & (1u << member))) continue;
    std::vector<AgentId> J;
    for (AgentId i = 0; i < agent_count; ++i) {
      if (mask & (1u << i)) J.push_back(i);
    }
    out.push_back(std::move(J));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

// Do all completions of `partial` (all plans when null) satisfy omega from s?
// On failure reports the first violating plan.
inline std::optional<JointPlan> find_violation(const JointPlan* partial, const State& s,
                                               const Ppd& ppd, OutcomeCache& cache) {
  for (PlanEnumerator en(partial, cache.horizon(), ppd.vocab); !en.done(); en.advance()) {
    if (!cache.outcome(s, en)) return en.current();
  }
  return std::nullopt;
}

inline void check_attribution_inputs(AgentId i, const JointPlan& plan, const Ppd& ppd) {
  if (i < 0 || i >= ppd.vocab.agent_count()) throw ValidationError("unknown agent");
  if (!plan.covers_all(ppd.vocab)) {
    throw ValidationError("responsibility attribution needs a plan covering every agent");
  }
}

inline Verdict attribute_with(ResponsibilityKind kind, AgentId i, const JointPlan& plan,
                              const State& s0, const Ppd& ppd, OutcomeCache& cache) {
  check_attribution_inputs(i, plan, ppd);
  const int k = plan.horizon();
  Verdict v;
  JointPlan own = subplan(plan, std::vector<AgentId>{i});

  switch (kind) {
    case ResponsibilityKind::Car:
    case ResponsibilityKind::Aar: {
      // Active responsibility: the agent's own actions force omega, yet some
      // joint plan avoids it.
      if (auto bad = find_violation(&own, s0, ppd, cache)) {
        v.counter_plan = std::move(bad);
        return v;
      }
      Verdict inev = is_inevitable(cache.omega(), s0, k, ppd.theory, ppd.vocab, &cache);
      if (inev.holds) return v;
      if (kind == ResponsibilityKind::Aar) {
        // Additionally forced from every epistemically possible start state.
        for (const State& s1 : ppd.epistemic_for(i)) {
          if (auto bad = find_violation(&own, s1, ppd, cache)) {
            v.witness_state = s1;
            v.counter_plan = std::move(bad);
            return v;
          }
        }
      }
      v.holds = true;
      v.counter_plan = std::move(inev.counter_plan);
      return v;
    }

    case ResponsibilityKind::Cpr: {
      // Passive responsibility: omega occurred and the agent alone could have
      // deviated to avoid it.
      if (!cache.outcome(s0, plan)) return v;
      std::optional<JointPlan> others;
      if (ppd.vocab.agent_count() > 1) others = complement_subplan(plan, i);
      if (auto dev = find_violation(others ? &*others : nullptr, s0, ppd, cache)) {
        v.holds = true;
        v.witness_plan = std::move(dev);
      }
      return v;
    }

    case ResponsibilityKind::Ccr: {
      // Contributive responsibility: omega occurred and the agent is pivotal
      // in some coalition whose actions suffice for it.
      if (!cache.outcome(s0, plan)) return v;
      for (const auto& J : coalitions_containing(i, ppd.vocab.agent_count())) {
        JointPlan pinned = subplan(plan, J);
        if (find_violation(&pinned, s0, ppd, cache)) continue;  // J not sufficient
        std::optional<JointPlan> rest;
        if (J.size() > 1) {
          std::vector<AgentId> without;
          for (AgentId j : J) {
            if (j != i) without.push_back(j);
          }
          rest = subplan(plan, without);
        }
        if (auto dev = find_violation(rest ? &*rest : nullptr, s0, ppd, cache)) {
          v.holds = true;
          v.witness_coalition = J;
          v.witness_plan = std::move(dev);
          return v;
        }
      }
      return v;
    }
  }
  return v;
}

}  // namespace detail

// Does agent i bear responsibility of the given kind for omega in the joint
// plan executed from s0? For plain attribution s0 is the domain's true
// initial state; anticipation calls this with each epistemically possible one.
inline Verdict attribute(ResponsibilityKind kind, AgentId i, const JointPlan& plan,
                         const State& s0, const Ppd& ppd, const Formula& omega,
                         OutcomeCache* cache = nullptr) {
  omega.validate(ppd.vocab);
  OutcomeCache local(ppd.theory, ppd.vocab, omega, plan.horizon());
  return detail::attribute_with(kind, i, plan, s0, ppd, cache ? *cache : local);
}

// Could the individual plan make agent i responsible? Holds when some
// epistemically possible start state and some compatible completion yield an
// attribution. The witness is the least such (state in declaration order of
// the epistemic set, then plan order).
inline Verdict anticipate(ResponsibilityKind kind, AgentId i, const JointPlan& individual,
                          const Ppd& ppd, const Formula& omega, OutcomeCache* cache = nullptr) {
  if (i < 0 || i >= ppd.vocab.agent_count()) throw ValidationError("unknown agent");
  if (individual.coalition() != std::vector<AgentId>{i}) {
    throw ValidationError("anticipation takes the agent's own individual plan");
  }
  omega.validate(ppd.vocab);
  const int k = individual.horizon();
  OutcomeCache local(ppd.theory, ppd.vocab, omega, k);
  OutcomeCache& c = cache ? *cache : local;

  Verdict v;
  bool per_completion =
      kind == ResponsibilityKind::Cpr || kind == ResponsibilityKind::Ccr;
  for (const State& s1 : ppd.epistemic_for(i)) {
    if (!per_completion) {
      // Active attributions depend only on the agent's own sub-plan, so any
      // completion decides them; the all-skip completion is also the least.
      PlanEnumerator en(&individual, k, ppd.vocab);
      Verdict at = detail::attribute_with(kind, i, en.current(), s1, ppd, c);
      if (at.holds) {
        v.holds = true;
        v.witness_state = s1;
        v.witness_plan = en.current();
        return v;
      }
      continue;
    }
    for (PlanEnumerator en(&individual, k, ppd.vocab); !en.done(); en.advance()) {
      Verdict at = detail::attribute_with(kind, i, en.current(), s1, ppd, c);
      if (at.holds) {
        v.holds = true;
        v.witness_state = s1;
        v.witness_plan = en.current();
        return v;
      }
    }
  }
  return v;
}

// The unfolded form of anticipated agentive active responsibility: every
// epistemically possible run of the individual plan yields omega, and some
// epistemically possible run of some plan avoids it. Kept as an independent
// route for equivalence testing against anticipate(AAR, ...).
inline Verdict anticipate_aar_direct(AgentId i, const JointPlan& individual, const Ppd& ppd,
                                     const Formula& omega, OutcomeCache* cache = nullptr) {
  if (i < 0 || i >= ppd.vocab.agent_count()) throw ValidationError("unknown agent");
  if (individual.coalition() != std::vector<AgentId>{i}) {
    throw ValidationError("anticipation takes the agent's own individual plan");
  }
  omega.validate(ppd.vocab);
  const int k = individual.horizon();
  OutcomeCache local(ppd.theory, ppd.vocab, omega, k);
  OutcomeCache& c = cache ? *cache : local;

  Verdict v;
  for (const State& s1 : ppd.epistemic_for(i)) {
    if (detail::find_violation(&individual, s1, ppd, c)) return v;
  }
  for (const State& s2 : ppd.epistemic_for(i)) {
    if (auto avoid = detail::find_violation(nullptr, s2, ppd, c)) {
      v.holds = true;
      v.witness_state = s2;
      v.counter_plan = std::move(avoid);
      return v;
    }
  }
  return v;
}

}  // namespace resplan
