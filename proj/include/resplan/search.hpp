#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "resplan/errors.hpp"
#include "resplan/ltlf.hpp"
#include "resplan/plan.hpp"
#include "resplan/ppd.hpp"

namespace resplan {

// Boolean answer plus whatever artifact explains it; which fields are filled
// is part of each operation's contract.
struct Verdict {
  bool holds = false;
  std::optional<State> witness_state;
  std::optional<JointPlan> witness_plan;
  std::optional<std::vector<AgentId>> witness_coalition;
  std::optional<JointPlan> counter_plan;
};

// Memoizes "does omega hold at t=0 on the history of plan P from state s" per
// (state, full-plan code). All responsibility checks over one (domain, omega,
// horizon) triple hit the same small set of histories over and over; this
// keeps each of them evaluated once. Dense per-state storage while the plan
// space is small, a hash map beyond that.
class OutcomeCache {
 public:
  OutcomeCache(const ActionTheory& theory, const Vocabulary& vocab, const Formula& omega, int k)
      : theory_(theory), vocab_(vocab), omega_(omega), horizon_(k) {
    std::uint64_t space = completion_count(vocab.agent_count() * k, vocab.action_count());
    dense_size_ = space <= kDenseLimit ? space : 0;
  }

  int horizon() const { return horizon_; }
  const Formula& omega() const { return omega_; }

  bool outcome(const State& s, const PlanEnumerator& en) {
    std::uint8_t* slot = find(s, en.current_code());
    if (*slot == kUnknown) {
      *slot = eval_.eval(en.run(s, theory_, vocab_), 0, omega_) ? kTrue : kFalse;
    }
    return *slot == kTrue;
  }

  bool outcome(const State& s, const JointPlan& full) {
    std::uint8_t* slot = find(s, plan_code(full, vocab_));
    if (*slot == kUnknown) {
      *slot = eval_.eval(generate_history(full, s, theory_, vocab_), 0, omega_) ? kTrue : kFalse;
    }
    return *slot == kTrue;
  }

 private:
  static constexpr std::uint64_t kDenseLimit = 1u << 22;
  static constexpr std::uint8_t kUnknown = 0, kFalse = 1, kTrue = 2;

  const ActionTheory& theory_;
  const Vocabulary& vocab_;
  const Formula& omega_;
  int horizon_;
  std::uint64_t dense_size_;
  LtlEvaluator eval_;
  std::map<State, std::vector<std::uint8_t>> dense_;
  std::map<State, std::unordered_map<std::uint64_t, std::uint8_t>> sparse_;

  std::uint8_t* find(const State& s, std::uint64_t code) {
    if (dense_size_ != 0) {
      auto& v = dense_[s];
      if (v.empty()) v.assign(dense_size_, kUnknown);
      return &v[code];
    }
    return &sparse_[s][code];
  }
};

// Every full joint k-plan from s0 satisfies omega. When it does not hold, the
// counterexample is the lexicographically first violating plan.
inline Verdict is_inevitable(const Formula& omega, const State& s0, int k,
                             const ActionTheory& theory, const Vocabulary& vocab,
                             OutcomeCache* cache = nullptr) {
  OutcomeCache local(theory, vocab, omega, k);
  OutcomeCache& c = cache ? *cache : local;
  Verdict v;
  v.holds = true;
  for (PlanEnumerator en(nullptr, k, vocab); !en.done(); en.advance()) {
    if (!c.outcome(s0, en)) {
      v.holds = false;
      v.counter_plan = en.current();
      return v;
    }
  }
  return v;
}

// No unilateral change of agent i's actions alters omega's truth value on the
// resulting history.
inline bool is_powerless(AgentId i, const JointPlan& full, const State& s0,
                         const ActionTheory& theory, const Vocabulary& vocab,
                         const Formula& omega) {
  if (!full.covers_all(vocab)) throw ValidationError("powerlessness needs a full plan");
  OutcomeCache cache(theory, vocab, omega, full.horizon());
  bool reference = cache.outcome(s0, full);
  JointPlan others = vocab.agent_count() == 1
                         ? full  // placeholder, unused: every plan is a deviation of i alone
                         : complement_subplan(full, i);
  const JointPlan* pinned = vocab.agent_count() == 1 ? nullptr : &others;
  for (PlanEnumerator en(pinned, full.horizon(), vocab); !en.done(); en.advance()) {
    if (cache.outcome(s0, en) != reference) return false;
  }
  return true;
}

// One bounded plan-existence query: is there a full plan extending `pinned`
// whose history from `init` satisfies `goal` at t = 0?
struct PlanQuery {
  State init;
  int horizon = 0;
  std::optional<JointPlan> pinned;  // absent = all plans
  Formula goal;
};

inline std::optional<JointPlan> solve(const PlanQuery& q, const ActionTheory& theory,
                                      const Vocabulary& vocab) {
  OutcomeCache cache(theory, vocab, q.goal, q.horizon);
  const JointPlan* pinned = q.pinned ? &*q.pinned : nullptr;
  for (PlanEnumerator en(pinned, q.horizon, vocab); !en.done(); en.advance()) {
    if (cache.outcome(q.init, en)) return en.current();
  }
  return std::nullopt;
}

// Two runs coupled through everyone but `agent`: a primal plan extending
// `pinned_individual` whose history satisfies `primal_goal`, and a deviation
// for `agent` (all other agents unchanged) satisfying `deviant_goal`.
struct DeviationQuery {
  State init;
  int horizon = 0;
  AgentId agent = 0;
  JointPlan pinned_individual;
  Formula primal_goal;
  Formula deviant_goal;
};

inline bool solvable(const DeviationQuery& q, const ActionTheory& theory,
                     const Vocabulary& vocab) {
  OutcomeCache primal(theory, vocab, q.primal_goal, q.horizon);
  OutcomeCache deviant(theory, vocab, q.deviant_goal, q.horizon);
  for (PlanEnumerator en(&q.pinned_individual, q.horizon, vocab); !en.done(); en.advance()) {
    if (!primal.outcome(q.init, en)) continue;
    if (vocab.agent_count() == 1) {
      // The deviation ranges over every plan of the lone agent.
      for (PlanEnumerator dev(nullptr, q.horizon, vocab); !dev.done(); dev.advance()) {
        if (deviant.outcome(q.init, dev)) return true;
      }
      continue;
    }
    JointPlan others = complement_subplan(en.current(), q.agent);
    for (PlanEnumerator dev(&others, q.horizon, vocab); !dev.done(); dev.advance()) {
      if (deviant.outcome(q.init, dev)) return true;
    }
  }
  return false;
}

}  // namespace resplan
