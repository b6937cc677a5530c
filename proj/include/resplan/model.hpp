#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "resplan/errors.hpp"
#include "resplan/formula.hpp"
#include "resplan/symbols.hpp"

namespace resplan {

// A truth assignment over the declared propositions, as a bitmask.
struct State {
  std::uint64_t bits = 0;

  bool test(PropId p) const { return (bits >> p) & 1u; }
  void set(PropId p) { bits |= std::uint64_t{1} << p; }
  void clear(PropId p) { bits &= ~(std::uint64_t{1} << p); }

  friend bool operator==(const State&, const State&) = default;
  friend auto operator<=>(const State&, const State&) = default;

  static State of(std::initializer_list<PropId> props) {
    State s;
    for (PropId p : props) s.set(p);
    return s;
  }

  std::vector<PropId> props(const Vocabulary& vocab) const {
    std::vector<PropId> out;
    for (PropId p = 0; p < vocab.prop_count(); ++p) {
      if (test(p)) out.push_back(p);
    }
    return out;
  }
};

// Positive and negative effect preconditions, sparse over
// (agent, action, proposition); an absent entry is the constant-false formula.
class ActionTheory {
 public:
  void set_positive(AgentId i, ActionId a, PropId p, Formula f, const Vocabulary& vocab) {
    insert(pos_, i, a, p, std::move(f), vocab);
  }
  void set_negative(AgentId i, ActionId a, PropId p, Formula f, const Vocabulary& vocab) {
    insert(neg_, i, a, p, std::move(f), vocab);
  }

  const Formula* positive(AgentId i, ActionId a, PropId p) const { return lookup(pos_, i, a, p); }
  const Formula* negative(AgentId i, ActionId a, PropId p) const { return lookup(neg_, i, a, p); }

  struct Entry {
    bool positive;
    AgentId agent;
    ActionId action;
    PropId prop;
    const Formula* formula;
  };

  // Sorted by (agent, action, prop, sign) for canonical serialization.
  std::vector<Entry> sorted_entries() const {
    std::vector<Entry> out;
    out.reserve(pos_.size() + neg_.size());
    for (const auto& [k, f] : pos_) out.push_back(unpack(k, true, &f));
    for (const auto& [k, f] : neg_) out.push_back(unpack(k, false, &f));
    std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) {
      return std::tie(a.agent, a.action, a.prop, b.positive) <
             std::tie(b.agent, b.action, b.prop, a.positive);
    });
    return out;
  }

  bool empty() const { return pos_.empty() && neg_.empty(); }

 private:
  std::unordered_map<std::uint64_t, Formula> pos_;
  std::unordered_map<std::uint64_t, Formula> neg_;

  static std::uint64_t key(AgentId i, ActionId a, PropId p) {
    return (static_cast<std::uint64_t>(i) << 42) | (static_cast<std::uint64_t>(a) << 21) |
           static_cast<std::uint64_t>(p);
  }

  static Entry unpack(std::uint64_t k, bool positive, const Formula* f) {
    return {positive, static_cast<AgentId>(k >> 42), static_cast<ActionId>((k >> 21) & 0x1fffff),
            static_cast<PropId>(k & 0x1fffff), f};
  }

  void insert(std::unordered_map<std::uint64_t, Formula>& table, AgentId i, ActionId a, PropId p,
              Formula f, const Vocabulary& vocab) {
    if (a == kSkipAction) throw ValidationError("the skip action cannot be given effects");
    if (i < 0 || i >= vocab.agent_count()) throw ValidationError("effect entry names an undeclared agent");
    if (a < 0 || a >= vocab.action_count()) throw ValidationError("effect entry names an undeclared action");
    if (p < 0 || p >= vocab.prop_count()) throw ValidationError("effect entry names an undeclared proposition");
    if (!f.is_propositional()) {
      throw ValidationError("effect precondition formulas may not contain temporal operators");
    }
    f.validate(vocab);
    table.insert_or_assign(key(i, a, p), std::move(f));
  }

  static const Formula* lookup(const std::unordered_map<std::uint64_t, Formula>& table, AgentId i,
                               ActionId a, PropId p) {
    auto it = table.find(key(i, a, p));
    return it == table.end() ? nullptr : &it->second;
  }
};

// k+1 states plus one action per (agent, step) for steps 0..k-1. States are
// 0-indexed through k; the action row at step t is what happens between t and
// t+1, so a does-atom evaluated at t reads row t and is false at t = k.
class History {
 public:
  History(std::vector<State> states, std::vector<ActionId> actions, int agent_count)
      : states_(std::move(states)), actions_(std::move(actions)), agent_count_(agent_count) {
    if (states_.empty()) throw ValidationError("a history needs at least one state");
    if (actions_.size() != static_cast<std::size_t>(horizon()) * static_cast<std::size_t>(agent_count_)) {
      throw ValidationError("history action matrix does not match horizon and agent count");
    }
  }

  int horizon() const { return static_cast<int>(states_.size()) - 1; }
  int agent_count() const { return agent_count_; }
  const State& state(int t) const { return states_[static_cast<std::size_t>(t)]; }
  ActionId action(AgentId i, int t) const {
    return actions_[static_cast<std::size_t>(t) * agent_count_ + static_cast<std::size_t>(i)];
  }
  std::span<const ActionId> action_row(int t) const {
    return {actions_.data() + static_cast<std::size_t>(t) * agent_count_,
            static_cast<std::size_t>(agent_count_)};
  }

 private:
  std::vector<State> states_;
  std::vector<ActionId> actions_;  // row-major by step
  int agent_count_;
};

namespace detail {

// Propositional evaluation against a single step: the state plus the joint
// action executed at that step (empty span at the final time point).
inline bool eval_step(const Formula& f, int idx, const State& s, std::span<const ActionId> row) {
  const FormulaNode& n = f.node(idx);
  switch (n.kind) {
    case NodeKind::True: return true;
    case NodeKind::False: return false;
    case NodeKind::Prop: return s.test(n.a);
    case NodeKind::Does:
      return !row.empty() && row[static_cast<std::size_t>(n.a)] == n.b;
    case NodeKind::Not: return !eval_step(f, n.a, s, row);
    case NodeKind::And: return eval_step(f, n.a, s, row) && eval_step(f, n.b, s, row);
    case NodeKind::Or: return eval_step(f, n.a, s, row) || eval_step(f, n.b, s, row);
    case NodeKind::Implies: return !eval_step(f, n.a, s, row) || eval_step(f, n.b, s, row);
    default:
      throw ValidationError("temporal operator in a propositional formula");
  }
}

}  // namespace detail

// Truth of a propositional formula at time point t of a history.
inline bool eval_pl(const History& h, int t, const Formula& f) {
  if (t < 0 || t > h.horizon()) throw ValidationError("time point outside the history");
  if (!f.is_propositional()) {
    throw ValidationError("eval_pl requires a temporal-operator-free formula");
  }
  std::span<const ActionId> row = t < h.horizon() ? h.action_row(t) : std::span<const ActionId>{};
  return detail::eval_step(f, f.root(), h.state(t), row);
}

// One step of execution. A proposition is added when some executed action's
// positive effect precondition holds and no executed action's negative one
// does, deleted in the mirrored case, and left untouched on a conflict.
inline State successor_state(const State& s, std::span<const ActionId> joint_action,
                             const ActionTheory& theory, const Vocabulary& vocab) {
  if (joint_action.size() != static_cast<std::size_t>(vocab.agent_count())) {
    throw ValidationError("joint action must assign exactly one action to every agent");
  }
  State next = s;
  for (PropId p = 0; p < vocab.prop_count(); ++p) {
    bool add = false;
    bool del = false;
    for (AgentId i = 0; i < vocab.agent_count(); ++i) {
      ActionId a = joint_action[static_cast<std::size_t>(i)];
      if (!add) {
        if (const Formula* f = theory.positive(i, a, p)) {
          add = detail::eval_step(*f, f->root(), s, joint_action);
        }
      }
      if (!del) {
        if (const Formula* f = theory.negative(i, a, p)) {
          del = detail::eval_step(*f, f->root(), s, joint_action);
        }
      }
      if (add && del) break;
    }
    if (add != del) {
      if (add) {
        next.set(p);
      } else {
        next.clear(p);
      }
    }
  }
  return next;
}

}  // namespace resplan
