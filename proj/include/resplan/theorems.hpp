#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <future>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "resplan/domain_io.hpp"
#include "resplan/plan_io.hpp"
#include "resplan/random_domain.hpp"
#include "resplan/responsibility.hpp"

namespace resplan {

// Enumerates the |Act|^k action sequences of one agent in ascending
// (lexicographic) order; the visitor returns true to stop.
template <typename Visitor>
std::optional<std::vector<ActionId>> find_sequence(int k, int action_count, Visitor&& visit) {
  std::vector<ActionId> seq(static_cast<std::size_t>(k), kSkipAction);
  for (;;) {
    if (visit(std::as_const(seq))) return seq;
    int t = k - 1;
    while (t >= 0 && seq[static_cast<std::size_t>(t)] + 1 == action_count) {
      seq[static_cast<std::size_t>(t)] = kSkipAction;
      --t;
    }
    if (t < 0) return std::nullopt;
    ++seq[static_cast<std::size_t>(t)];
  }
}

// First individual k-plan for the agent whose anticipation verdict for the
// given kind is false; absent when every plan anticipates it.
inline std::optional<JointPlan> find_plan_avoiding_anticipated(ResponsibilityKind kind, AgentId i,
                                                               const Ppd& ppd,
                                                               const Formula& omega, int k) {
  if (k < 0) throw ValidationError("horizon must be nonnegative");
  OutcomeCache cache(ppd.theory, ppd.vocab, omega, k);
  auto found = find_sequence(k, ppd.vocab.action_count(), [&](const std::vector<ActionId>& seq) {
    return !anticipate(kind, i, JointPlan::individual(i, seq), ppd, omega, &cache).holds;
  });
  if (!found) return std::nullopt;
  return JointPlan::individual(i, *found);
}

struct CheckResult {
  bool pass = true;
  std::string detail;  // set when pass is false

  static CheckResult fail(std::string d) { return {false, std::move(d)}; }
};

namespace detail {

inline std::uint64_t seq_code(const std::vector<ActionId>& seq, int action_count) {
  std::uint64_t code = 0;
  for (ActionId a : seq) {
    code = code * static_cast<std::uint64_t>(action_count) + static_cast<std::uint64_t>(a);
  }
  return code;
}

// Shared per-item evaluation state: outcome caches for omega and its
// negation, memoized anticipation verdicts per (kind, agent, sequence), and
// lazily computed inevitability verdicts. Everything here only memoizes pure
// functions of the item.
class ItemAnalysis {
 public:
  explicit ItemAnalysis(const CorpusItem& item)
      : item_(item),
        neg_omega_(Formula::negation(item.omega)),
        omega_cache_(item.ppd.theory, item.ppd.vocab, item_.omega, item.horizon),
        neg_cache_(item.ppd.theory, item.ppd.vocab, neg_omega_, item.horizon) {}

  const CorpusItem& item() const { return item_; }
  const Formula& neg_omega() const { return neg_omega_; }
  OutcomeCache& omega_cache() { return omega_cache_; }
  OutcomeCache& neg_cache() { return neg_cache_; }

  bool outcome(const State& s, const JointPlan& full) { return omega_cache_.outcome(s, full); }

  bool inevitable_omega() {
    if (!inev_omega_) {
      inev_omega_ = is_inevitable(item_.omega, item_.ppd.init, item_.horizon, item_.ppd.theory,
                                  item_.ppd.vocab, &omega_cache_)
                        .holds;
    }
    return *inev_omega_;
  }

  bool inevitable_neg_omega() {
    if (!inev_neg_) {
      inev_neg_ = is_inevitable(neg_omega_, item_.ppd.init, item_.horizon, item_.ppd.theory,
                                item_.ppd.vocab, &neg_cache_)
                      .holds;
    }
    return *inev_neg_;
  }

  bool attributes(ResponsibilityKind kind, AgentId i, const JointPlan& plan) {
    return attribute(kind, i, plan, item_.ppd.init, item_.ppd, item_.omega, &omega_cache_).holds;
  }

  // Anticipation of omega on the agent's individual plan, memoized.
  bool anticipates(ResponsibilityKind kind, AgentId i, const std::vector<ActionId>& seq) {
    return memo(ant_omega_[static_cast<int>(kind)], kind, i, seq, item_.omega, omega_cache_);
  }

  // Anticipation of !omega, memoized (used by the duality and coordination
  // checks).
  bool anticipates_negated(ResponsibilityKind kind, AgentId i, const std::vector<ActionId>& seq) {
    return memo(ant_neg_[static_cast<int>(kind)], kind, i, seq, neg_omega_, neg_cache_);
  }

  bool anticipates_aar_direct(AgentId i, const std::vector<ActionId>& seq) {
    return anticipate_aar_direct(i, JointPlan::individual(i, seq), item_.ppd, item_.omega,
                                 &omega_cache_)
        .holds;
  }

 private:
  const CorpusItem& item_;
  Formula neg_omega_;
  OutcomeCache omega_cache_;
  OutcomeCache neg_cache_;
  std::optional<bool> inev_omega_;
  std::optional<bool> inev_neg_;
  std::array<std::unordered_map<std::uint64_t, bool>, 4> ant_omega_;
  std::array<std::unordered_map<std::uint64_t, bool>, 4> ant_neg_;

  bool memo(std::unordered_map<std::uint64_t, bool>& table, ResponsibilityKind kind, AgentId i,
            const std::vector<ActionId>& seq, const Formula& omega, OutcomeCache& cache) {
    int ac = item_.ppd.vocab.action_count();
    std::uint64_t key =
        seq_code(seq, ac) * static_cast<std::uint64_t>(item_.ppd.vocab.agent_count()) +
        static_cast<std::uint64_t>(i);
    auto it = table.find(key);
    if (it != table.end()) return it->second;
    bool value = anticipate(kind, i, JointPlan::individual(i, seq), item_.ppd, omega, &cache).holds;
    table.emplace(key, value);
    return value;
  }
};

inline std::string describe_plan(const JointPlan& plan, const Vocabulary& vocab) {
  std::string s = format_plan(plan, vocab);
  if (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

}  // namespace detail

// Completeness of contributive responsibility: whenever the outcome holds on
// a sampled plan's history and was avoidable, some agent bears CCR — and the
// coalition chain Agt, Agt minus one agent, ..., empty has an adjacent pair
// switching from sufficient to insufficient whose dropped agent bears it.
inline CheckResult check_ccr_completeness(const CorpusItem& item, detail::ItemAnalysis& a) {
  const Ppd& ppd = item.ppd;
  int n = ppd.vocab.agent_count();
  for (const JointPlan& plan : item.plans) {
    if (!a.outcome(ppd.init, plan)) continue;
    if (a.inevitable_omega()) continue;
    bool someone = false;
    for (AgentId i = 0; i < n && !someone; ++i) {
      someone = a.attributes(ResponsibilityKind::Ccr, i, plan);
    }
    if (!someone) {
      return CheckResult::fail("outcome avoidable and realized, yet no agent bears CCR\nplan:\n" +
                               detail::describe_plan(plan, ppd.vocab));
    }
    // Walk the chain and find the switch.
    auto sufficient = [&](const std::vector<AgentId>& J) {
      if (J.empty()) return a.inevitable_omega();
      JointPlan pinned = subplan(plan, J);
      bool all = true;
      for (PlanEnumerator en(&pinned, item.horizon, ppd.vocab); !en.done() && all; en.advance()) {
        all = a.omega_cache().outcome(ppd.init, en);
      }
      return all;
    };
    std::vector<AgentId> J;
    for (AgentId i = 0; i < n; ++i) J.push_back(i);
    std::optional<AgentId> switch_agent;
    for (AgentId drop = 0; drop < n; ++drop) {
      std::vector<AgentId> smaller(J.begin() + 1, J.end());  // drop the first remaining agent
      AgentId dropped = J.front();
      if (sufficient(J) && !sufficient(smaller)) {
        switch_agent = dropped;
        break;
      }
      J = std::move(smaller);
    }
    if (!switch_agent) {
      return CheckResult::fail("no sufficient-to-insufficient switch along the coalition chain");
    }
    if (!a.attributes(ResponsibilityKind::Ccr, *switch_agent, plan)) {
      return CheckResult::fail("chain switch agent " + ppd.vocab.agents.name(*switch_agent) +
                               " does not bear CCR\nplan:\n" +
                               detail::describe_plan(plan, ppd.vocab));
    }
  }
  return {};
}

// The implication lattice between the four notions and their anticipations:
// AAR => CAR => CCR and CPR => CCR pointwise; attribution implies
// anticipation on the agent's own sub-plan; the same vertical implications
// lifted to anticipations; and anticipated CCR implies anticipated CPR.
inline CheckResult check_implication_lattice(const CorpusItem& item, detail::ItemAnalysis& a) {
  const Ppd& ppd = item.ppd;
  using RK = ResponsibilityKind;
  for (const JointPlan& plan : item.plans) {
    for (AgentId i = 0; i < ppd.vocab.agent_count(); ++i) {
      bool aar = a.attributes(RK::Aar, i, plan);
      bool car = a.attributes(RK::Car, i, plan);
      bool cpr = a.attributes(RK::Cpr, i, plan);
      bool ccr = a.attributes(RK::Ccr, i, plan);
      const auto& seq = plan.sequence(i);
      bool ant_aar = a.anticipates(RK::Aar, i, seq);
      bool ant_car = a.anticipates(RK::Car, i, seq);
      bool ant_cpr = a.anticipates(RK::Cpr, i, seq);
      bool ant_ccr = a.anticipates(RK::Ccr, i, seq);
      auto ctx = [&](const char* which) {
        return std::string(which) + " violated for agent " + ppd.vocab.agents.name(i) +
               "\nplan:\n" + detail::describe_plan(plan, ppd.vocab);
      };
      if (aar && !car) return CheckResult::fail(ctx("AAR => CAR"));
      if (car && !ccr) return CheckResult::fail(ctx("CAR => CCR"));
      if (cpr && !ccr) return CheckResult::fail(ctx("CPR => CCR"));
      if ((aar && !ant_aar) || (car && !ant_car) || (cpr && !ant_cpr) || (ccr && !ant_ccr)) {
        return CheckResult::fail(ctx("attribution => anticipation"));
      }
      if (ant_aar && !ant_car) return CheckResult::fail(ctx("anticipated AAR => anticipated CAR"));
      if ((ant_car && !ant_ccr) || (ant_cpr && !ant_ccr)) {
        return CheckResult::fail(ctx("anticipated CAR/CPR => anticipated CCR"));
      }
      if (ant_ccr && !ant_cpr) return CheckResult::fail(ctx("anticipated CCR => anticipated CPR"));
    }
  }
  return {};
}

// For every agent there is an individual plan that does not anticipate AAR
// for the outcome.
inline CheckResult check_aar_avoidance(const CorpusItem& item, detail::ItemAnalysis& a) {
  const Ppd& ppd = item.ppd;
  for (AgentId i = 0; i < ppd.vocab.agent_count(); ++i) {
    auto found = find_sequence(item.horizon, ppd.vocab.action_count(),
                               [&](const std::vector<ActionId>& seq) {
                                 return !a.anticipates(ResponsibilityKind::Aar, i, seq);
                               });
    if (!found) {
      return CheckResult::fail("agent " + ppd.vocab.agents.name(i) +
                               " anticipates AAR in every individual plan");
    }
  }
  return {};
}

// When some individual plan anticipates AAR for the outcome, then for every
// individual plan: not anticipating CPR for the negated outcome is equivalent
// to anticipating AAR for the outcome.
inline CheckResult check_aar_cpr_duality(const CorpusItem& item, detail::ItemAnalysis& a) {
  const Ppd& ppd = item.ppd;
  for (AgentId i = 0; i < ppd.vocab.agent_count(); ++i) {
    bool premise = false;
    find_sequence(item.horizon, ppd.vocab.action_count(), [&](const std::vector<ActionId>& seq) {
      premise = a.anticipates(ResponsibilityKind::Aar, i, seq);
      return premise;
    });
    if (!premise) continue;
    auto bad = find_sequence(
        item.horizon, ppd.vocab.action_count(), [&](const std::vector<ActionId>& seq) {
          bool ant_aar = a.anticipates(ResponsibilityKind::Aar, i, seq);
          bool ant_cpr_neg = a.anticipates_negated(ResponsibilityKind::Cpr, i, seq);
          return ant_aar == ant_cpr_neg;  // must always differ under the premise
        });
    if (bad) {
      return CheckResult::fail("duality violated for agent " + ppd.vocab.agents.name(i) +
                               " on individual plan " +
                               detail::describe_plan(JointPlan::individual(i, *bad), ppd.vocab));
    }
  }
  return {};
}

// Coordination guarantee: in any joint plan where no agent anticipates CPR
// for the negated outcome on its own sub-plan, either the negated outcome is
// inevitable or the plan realizes the outcome.
inline CheckResult check_coordination(const CorpusItem& item, detail::ItemAnalysis& a) {
  const Ppd& ppd = item.ppd;
  int n = ppd.vocab.agent_count();
  for (PlanEnumerator en(nullptr, item.horizon, ppd.vocab); !en.done(); en.advance()) {
    const JointPlan& plan = en.current();
    bool clean = true;
    for (AgentId i = 0; i < n && clean; ++i) {
      clean = !a.anticipates_negated(ResponsibilityKind::Cpr, i, plan.sequence(i));
    }
    if (!clean) continue;
    if (a.inevitable_neg_omega()) continue;
    if (!a.outcome(ppd.init, plan)) {
      return CheckResult::fail(
          "no agent anticipates CPR for the negated outcome, it is avoidable, and the plan "
          "still misses the outcome\nplan:\n" +
          detail::describe_plan(plan, ppd.vocab));
    }
  }
  return {};
}

// The modular anticipation of AAR agrees with its unfolded definition.
inline CheckResult check_aar_direct_equivalence(const CorpusItem& item, detail::ItemAnalysis& a) {
  const Ppd& ppd = item.ppd;
  for (AgentId i = 0; i < ppd.vocab.agent_count(); ++i) {
    auto bad = find_sequence(item.horizon, ppd.vocab.action_count(),
                             [&](const std::vector<ActionId>& seq) {
                               return a.anticipates(ResponsibilityKind::Aar, i, seq) !=
                                      a.anticipates_aar_direct(i, seq);
                             });
    if (bad) {
      return CheckResult::fail("anticipate(AAR) disagrees with its direct form for agent " +
                               ppd.vocab.agents.name(i) + " on " +
                               detail::describe_plan(JointPlan::individual(i, *bad), ppd.vocab));
    }
  }
  return {};
}

// Anticipated CCR coincides with anticipated CPR.
inline CheckResult check_ccr_cpr_anticipation_equivalence(const CorpusItem& item,
                                                          detail::ItemAnalysis& a) {
  const Ppd& ppd = item.ppd;
  for (const JointPlan& plan : item.plans) {
    for (AgentId i = 0; i < ppd.vocab.agent_count(); ++i) {
      const auto& seq = plan.sequence(i);
      bool cpr = a.anticipates(ResponsibilityKind::Cpr, i, seq);
      bool ccr = a.anticipates(ResponsibilityKind::Ccr, i, seq);
      if (cpr != ccr) {
        return CheckResult::fail("anticipated CCR and CPR disagree for agent " +
                                 ppd.vocab.agents.name(i) + " on " +
                                 detail::describe_plan(JointPlan::individual(i, seq), ppd.vocab));
      }
    }
  }
  return {};
}

inline constexpr std::array<const char*, 7> kCheckNames = {
    "ccr-completeness",
    "implication-lattice",
    "aar-avoidance",
    "aar-cpr-duality",
    "coordination",
    "anticipated-aar-direct-equivalence",
    "anticipated-ccr-cpr-equivalence",
};

inline std::array<CheckResult, 7> run_item_checks(const CorpusItem& item) {
  detail::ItemAnalysis a(item);
  return {
      check_ccr_completeness(item, a),
      check_implication_lattice(item, a),
      check_aar_avoidance(item, a),
      check_aar_cpr_duality(item, a),
      check_coordination(item, a),
      check_aar_direct_equivalence(item, a),
      check_ccr_cpr_anticipation_equivalence(item, a),
  };
}

struct SuiteConfig {
  DomainBounds bounds;
  int items = 200;
  std::uint64_t first_seed = 1;
  int jobs = 1;
};

struct SuiteLine {
  std::string check;
  std::uint64_t seed;
  bool pass;
  std::string counterexample;  // full replayable block when failed
};

struct SuiteReport {
  std::vector<SuiteLine> lines;
  int items = 0;
  int failures = 0;

  std::string render() const {
    std::string out;
    for (const auto& line : lines) {
      out += line.check;
      out += " seed=" + std::to_string(line.seed);
      out += line.pass ? " PASS\n" : " FAIL\n";
      if (!line.pass) out += line.counterexample;
    }
    out += "summary items=" + std::to_string(items) +
           " checks=" + std::to_string(lines.size()) +
           " failures=" + std::to_string(failures) + '\n';
    return out;
  }
};

namespace detail {

inline std::string counterexample_block(const CorpusItem& item, const std::string& detail_text) {
  std::string out;
  out += "--- counterexample seed=" + std::to_string(item.seed) + " ---\n";
  out += serialize_domain(item.ppd);
  out += "outcome: " + item.omega.to_string(item.ppd.vocab) + '\n';
  out += "horizon: " + std::to_string(item.horizon) + '\n';
  for (const JointPlan& plan : item.plans) {
    out += "plan:\n";
    out += format_plan(plan, item.ppd.vocab);
  }
  out += "detail: " + detail_text + '\n';
  out += "--- end counterexample ---\n";
  return out;
}

}  // namespace detail

inline SuiteReport run_theorem_suite(const SuiteConfig& config) {
  config.bounds.validate();
  SuiteReport report;
  report.items = config.items;
  std::vector<std::array<CheckResult, 7>> results(static_cast<std::size_t>(config.items));
  std::vector<CorpusItem> items(static_cast<std::size_t>(config.items));
  auto work = [&](int j) {
    items[static_cast<std::size_t>(j)] =
        make_corpus_item(config.bounds, config.first_seed + static_cast<std::uint64_t>(j));
    results[static_cast<std::size_t>(j)] = run_item_checks(items[static_cast<std::size_t>(j)]);
  };
  if (config.jobs > 1) {
    std::vector<std::future<void>> futures;
    std::atomic<int> next{0};
    for (int w = 0; w < config.jobs; ++w) {
      futures.push_back(std::async(std::launch::async, [&] {
        for (int j = next.fetch_add(1); j < config.items; j = next.fetch_add(1)) work(j);
      }));
    }
    for (auto& f : futures) f.get();
  } else {
    for (int j = 0; j < config.items; ++j) work(j);
  }
  for (int j = 0; j < config.items; ++j) {
    for (std::size_t c = 0; c < kCheckNames.size(); ++c) {
      const CheckResult& r = results[static_cast<std::size_t>(j)][c];
      SuiteLine line{kCheckNames[c], items[static_cast<std::size_t>(j)].seed, r.pass, ""};
      if (!r.pass) {
        ++report.failures;
        line.counterexample =
            detail::counterexample_block(items[static_cast<std::size_t>(j)], r.detail);
      }
      report.lines.push_back(std::move(line));
    }
  }
  return report;
}

}  // namespace resplan
