#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "resplan/errors.hpp"
#include "resplan/model.hpp"
#include "resplan/symbols.hpp"

namespace resplan {

// Equal-length action sequences for a nonempty coalition. The coalition is
// kept sorted by agent id (declaration order), which also fixes the
// lexicographic order used everywhere witnesses are reported: plans compare
// as the concatenation of their sequences, agents outermost, then steps,
// with actions ordered by declaration (skip first).
class JointPlan {
 public:
  JointPlan(std::vector<AgentId> coalition, std::vector<std::vector<ActionId>> seqs, int horizon)
      : coalition_(std::move(coalition)), seqs_(std::move(seqs)), horizon_(horizon) {
    if (coalition_.empty()) throw ValidationError("a plan needs a nonempty coalition");
    if (seqs_.size() != coalition_.size()) {
      throw ValidationError("plan must carry one sequence per coalition member");
    }
    for (std::size_t j = 1; j < coalition_.size(); ++j) {
      if (coalition_[j - 1] >= coalition_[j]) {
        throw ValidationError("plan coalition must be strictly increasing agent ids");
      }
    }
    for (const auto& seq : seqs_) {
      if (static_cast<int>(seq.size()) != horizon_) {
        throw ValidationError("all sequences in a plan must share the horizon");
      }
    }
  }

  static JointPlan individual(AgentId agent, std::vector<ActionId> seq) {
    int k = static_cast<int>(seq.size());
    return JointPlan({agent}, {std::move(seq)}, k);
  }

  int horizon() const { return horizon_; }
  const std::vector<AgentId>& coalition() const { return coalition_; }
  int coalition_size() const { return static_cast<int>(coalition_.size()); }

  bool has_agent(AgentId i) const {
    return std::binary_search(coalition_.begin(), coalition_.end(), i);
  }

  const std::vector<ActionId>& sequence(AgentId i) const {
    auto it = std::lower_bound(coalition_.begin(), coalition_.end(), i);
    if (it == coalition_.end() || *it != i) {
      throw ValidationError("agent is not part of this plan's coalition");
    }
    return seqs_[static_cast<std::size_t>(it - coalition_.begin())];
  }

  ActionId action(AgentId i, int t) const { return sequence(i)[static_cast<std::size_t>(t)]; }

  bool covers_all(const Vocabulary& vocab) const {
    return static_cast<int>(coalition_.size()) == vocab.agent_count();
  }

  friend bool operator==(const JointPlan& a, const JointPlan& b) {
    return a.horizon_ == b.horizon_ && a.coalition_ == b.coalition_ && a.seqs_ == b.seqs_;
  }

  // Agent-major, step-minor comparison; only meaningful for equal coalitions.
  friend bool lex_less(const JointPlan& a, const JointPlan& b) { return a.seqs_ < b.seqs_; }

 private:
  std::vector<AgentId> coalition_;
  std::vector<std::vector<ActionId>> seqs_;
  int horizon_;
};

inline JointPlan subplan(const JointPlan& plan, std::span<const AgentId> coalition) {
  if (coalition.empty()) throw ValidationError("sub-plan coalition may not be empty");
  std::vector<AgentId> sorted(coalition.begin(), coalition.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::vector<ActionId>> seqs;
  seqs.reserve(sorted.size());
  for (AgentId i : sorted) {
    if (!plan.has_agent(i)) {
      throw ValidationError("sub-plan coalition is not a subset of the plan's coalition");
    }
    seqs.push_back(plan.sequence(i));
  }
  return JointPlan(std::move(sorted), std::move(seqs), plan.horizon());
}

// The sub-plan for everyone in `plan` except `without`; empty result is an
// error (use the enumeration entry points for the empty coalition instead).
inline JointPlan complement_subplan(const JointPlan& plan, AgentId without) {
  std::vector<AgentId> rest;
  for (AgentId i : plan.coalition()) {
    if (i != without) rest.push_back(i);
  }
  return subplan(plan, rest);
}

inline JointPlan plan_union(const JointPlan& a, const JointPlan& b) {
  if (a.horizon() != b.horizon()) {
    throw ValidationError("plan union requires equal horizons");
  }
  std::vector<AgentId> coalition;
  std::vector<std::vector<ActionId>> seqs;
  auto push = [&](const JointPlan& p, AgentId i) {
    coalition.push_back(i);
    seqs.push_back(p.sequence(i));
  };
  const auto& ca = a.coalition();
  const auto& cb = b.coalition();
  std::size_t ia = 0, ib = 0;
  while (ia < ca.size() || ib < cb.size()) {
    if (ib == cb.size() || (ia < ca.size() && ca[ia] < cb[ib])) {
      push(a, ca[ia++]);
    } else if (ia == ca.size() || cb[ib] < ca[ia]) {
      push(b, cb[ib++]);
    } else {
      throw ValidationError("plan union requires disjoint coalitions");
    }
  }
  return JointPlan(std::move(coalition), std::move(seqs), a.horizon());
}

// True iff `part` can be extended to `whole`: equal horizons, coalition
// containment, and agreement on the shared agents.
inline bool is_compatible(const JointPlan& part, const JointPlan& whole) {
  if (part.horizon() != whole.horizon()) return false;
  for (AgentId i : part.coalition()) {
    if (!whole.has_agent(i)) return false;
    if (part.sequence(i) != whole.sequence(i)) return false;
  }
  return true;
}

inline std::uint64_t completion_count(int free_slots, int action_count) {
  std::uint64_t n = 1;
  for (int j = 0; j < free_slots; ++j) n *= static_cast<std::uint64_t>(action_count);
  return n;
}

// Encodes a full plan as a base-|Act| number, agent-major and step-minor
// (the same order used for lexicographic comparisons), so equal codes mean
// equal plans at a fixed horizon.
inline std::uint64_t plan_code(const JointPlan& full, const Vocabulary& vocab) {
  std::uint64_t code = 0;
  for (AgentId i = 0; i < vocab.agent_count(); ++i) {
    for (ActionId a : full.sequence(i)) {
      code = code * static_cast<std::uint64_t>(vocab.action_count()) + static_cast<std::uint64_t>(a);
    }
  }
  return code;
}

// Streams every full joint k-plan extending a partial plan (or all plans when
// no partial is given), exactly once, in lexicographic order.
class PlanEnumerator {
 public:
  PlanEnumerator(const JointPlan* partial, int horizon, const Vocabulary& vocab)
      : horizon_(horizon), agent_count_(vocab.agent_count()), action_count_(vocab.action_count()) {
    if (horizon < 0) throw ValidationError("horizon must be nonnegative");
    if (partial && partial->horizon() != horizon) {
      throw ValidationError("partial plan horizon does not match the enumeration horizon");
    }
    seqs_.assign(static_cast<std::size_t>(agent_count_), {});
    std::uint64_t weight = 1;
    for (AgentId i = agent_count_; i-- > 0;) {
      bool pinned = partial && partial->has_agent(i);
      seqs_[static_cast<std::size_t>(i)] =
          pinned ? partial->sequence(i) : std::vector<ActionId>(static_cast<std::size_t>(horizon), kSkipAction);
      for (int t = horizon; t-- > 0;) {
        if (!pinned) free_.push_back({i, t, weight});
        code_ += weight * static_cast<std::uint64_t>(seqs_[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)]);
        weight *= static_cast<std::uint64_t>(action_count_);
      }
    }
    // Free slots were gathered least-significant first; keep them that way
    // and increment from the front for ascending (lexicographic) order.
  }

  std::uint64_t count() const {
    return completion_count(static_cast<int>(free_.size()), action_count_);
  }

  bool done() const { return done_; }
  std::uint64_t current_code() const { return code_; }

  const JointPlan& current() const {
    if (!cached_) {
      std::vector<AgentId> coalition(static_cast<std::size_t>(agent_count_));
      for (AgentId i = 0; i < agent_count_; ++i) coalition[static_cast<std::size_t>(i)] = i;
      cached_.emplace(std::move(coalition), seqs_, horizon_);
    }
    return *cached_;
  }

  void advance() {
    cached_.reset();
    for (auto& slot : free_) {
      ActionId a = seqs_[static_cast<std::size_t>(slot.agent)][static_cast<std::size_t>(slot.step)];
      if (a + 1 < action_count_) {
        seqs_[static_cast<std::size_t>(slot.agent)][static_cast<std::size_t>(slot.step)] = a + 1;
        code_ += slot.weight;
        return;
      }
      seqs_[static_cast<std::size_t>(slot.agent)][static_cast<std::size_t>(slot.step)] = kSkipAction;
      code_ -= slot.weight * static_cast<std::uint64_t>(a);
    }
    done_ = true;
  }

  // History of the current plan without materializing a JointPlan.
  History run(const State& s0, const ActionTheory& theory, const Vocabulary& vocab) const {
    std::vector<State> states;
    states.reserve(static_cast<std::size_t>(horizon_) + 1);
    states.push_back(s0);
    std::vector<ActionId> actions(static_cast<std::size_t>(agent_count_) * static_cast<std::size_t>(horizon_));
    std::vector<ActionId> row(static_cast<std::size_t>(agent_count_));
    for (int t = 0; t < horizon_; ++t) {
      for (AgentId i = 0; i < agent_count_; ++i) {
        row[static_cast<std::size_t>(i)] = seqs_[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
        actions[static_cast<std::size_t>(t) * agent_count_ + static_cast<std::size_t>(i)] =
            row[static_cast<std::size_t>(i)];
      }
      states.push_back(successor_state(states.back(), row, theory, vocab));
    }
    return History(std::move(states), std::move(actions), agent_count_);
  }

 private:
  struct Slot {
    AgentId agent;
    int step;
    std::uint64_t weight;
  };

  int horizon_;
  int agent_count_;
  int action_count_;
  std::vector<std::vector<ActionId>> seqs_;
  std::vector<Slot> free_;  // least significant first
  std::uint64_t code_ = 0;
  mutable std::optional<JointPlan> cached_;
  bool done_ = false;
};

// Visits completions in order until the visitor returns true ("stop").
// Returns the stopping plan, or nullopt when the stream was exhausted.
template <typename Visitor>
std::optional<JointPlan> find_completion(const JointPlan* partial, int horizon,
                                         const Vocabulary& vocab, Visitor&& visit) {
  for (PlanEnumerator en(partial, horizon, vocab); !en.done(); en.advance()) {
    if (visit(en.current())) return en.current();
  }
  return std::nullopt;
}

// Executes a full joint plan from s0: states[t+1] follows from states[t] and
// the plan's step-t action row. Deterministic.
inline History generate_history(const JointPlan& plan, const State& s0, const ActionTheory& theory,
                                const Vocabulary& vocab) {
  if (!plan.covers_all(vocab)) {
    throw ValidationError("history generation needs a plan covering every agent");
  }
  int n = vocab.agent_count();
  int k = plan.horizon();
  std::vector<State> states;
  states.reserve(static_cast<std::size_t>(k) + 1);
  states.push_back(s0);
  std::vector<ActionId> actions(static_cast<std::size_t>(n) * static_cast<std::size_t>(k));
  std::vector<ActionId> row(static_cast<std::size_t>(n));
  for (int t = 0; t < k; ++t) {
    for (AgentId i = 0; i < n; ++i) {
      row[static_cast<std::size_t>(i)] = plan.action(i, t);
      actions[static_cast<std::size_t>(t) * n + static_cast<std::size_t>(i)] = row[static_cast<std::size_t>(i)];
    }
    states.push_back(successor_state(states.back(), row, theory, vocab));
  }
  return History(std::move(states), std::move(actions), n);
}

// True when regenerating each stored state from its predecessor reproduces
// the history exactly.
inline bool respects_theory(const History& h, const ActionTheory& theory, const Vocabulary& vocab) {
  for (int t = 0; t < h.horizon(); ++t) {
    if (successor_state(h.state(t), h.action_row(t), theory, vocab) != h.state(t + 1)) return false;
  }
  return true;
}

}  // namespace resplan
