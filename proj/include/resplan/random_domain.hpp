#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "resplan/plan.hpp"
#include "resplan/ppd.hpp"

namespace resplan {

// Size and shape limits for generated domains, plus the seed. Generation is a
// pure function of this struct: identical bounds and seed give bit-identical
// domains on every platform (no std:: distributions involved).
struct DomainBounds {
  int max_agents = 3;
  int max_props = 3;
  int max_actions = 3;  // bounds the action set including skip
  int max_horizon = 2;
  double effect_density = 0.5;
  int formula_depth = 3;
  std::uint64_t rng_seed = 0;

  void validate() const {
    if (max_agents < 1 || max_props < 1 || max_actions < 1 || max_horizon < 1) {
      throw ValidationError("domain bounds must all be at least 1");
    }
    if (!(effect_density >= 0.0 && effect_density <= 1.0)) {
      throw ValidationError("effect density must lie in [0, 1]");
    }
    if (formula_depth < 0) throw ValidationError("formula depth must be nonnegative");
  }
};

namespace detail {

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return next() % n; }
  int range1(int max) { return 1 + static_cast<int>(below(static_cast<std::uint64_t>(max))); }
  bool chance(double p) { return static_cast<double>(next() >> 11) * 0x1.0p-53 < p; }
};

inline Formula random_pl_formula(SplitMix64& rng, const Vocabulary& vocab, int depth) {
  auto atom = [&]() -> Formula {
    switch (rng.below(10)) {
      case 0: return Formula::constant(true);
      case 1: return Formula::constant(false);
      case 2:
      case 3:
      case 4:
        return Formula::does(static_cast<AgentId>(rng.below(vocab.agent_count())),
                             static_cast<ActionId>(rng.below(vocab.action_count())));
      default:
        return Formula::prop(static_cast<PropId>(rng.below(vocab.prop_count())));
    }
  };
  if (depth <= 0) return atom();
  switch (rng.below(10)) {
    case 0:
    case 1:
      return Formula::negation(random_pl_formula(rng, vocab, depth - 1));
    case 2:
    case 3:
      return Formula::conj(random_pl_formula(rng, vocab, depth - 1),
                           random_pl_formula(rng, vocab, depth - 1));
    case 4:
      return Formula::disj(random_pl_formula(rng, vocab, depth - 1),
                           random_pl_formula(rng, vocab, depth - 1));
    case 5:
      return Formula::implies(random_pl_formula(rng, vocab, depth - 1),
                              random_pl_formula(rng, vocab, depth - 1));
    default:
      return atom();
  }
}

inline Formula random_ltl_formula(SplitMix64& rng, const Vocabulary& vocab, int depth) {
  auto atom = [&]() -> Formula {
    switch (rng.below(12)) {
      case 0: return Formula::constant(true);
      case 1: return Formula::constant(false);
      case 2:
      case 3:
        return Formula::does(static_cast<AgentId>(rng.below(vocab.agent_count())),
                             static_cast<ActionId>(rng.below(vocab.action_count())));
      default:
        return Formula::prop(static_cast<PropId>(rng.below(vocab.prop_count())));
    }
  };
  if (depth <= 0) return atom();
  switch (rng.below(12)) {
    case 0:
      return Formula::negation(random_ltl_formula(rng, vocab, depth - 1));
    case 1:
      return Formula::conj(random_ltl_formula(rng, vocab, depth - 1),
                           random_ltl_formula(rng, vocab, depth - 1));
    case 2:
      return Formula::disj(random_ltl_formula(rng, vocab, depth - 1),
                           random_ltl_formula(rng, vocab, depth - 1));
    case 3:
      return Formula::implies(random_ltl_formula(rng, vocab, depth - 1),
                              random_ltl_formula(rng, vocab, depth - 1));
    case 4:
      return Formula::next(random_ltl_formula(rng, vocab, depth - 1));
    case 5:
      return Formula::until(random_ltl_formula(rng, vocab, depth - 1),
                            random_ltl_formula(rng, vocab, depth - 1));
    case 6:
      return Formula::eventually(random_ltl_formula(rng, vocab, depth - 1));
    case 7:
      return Formula::globally(random_ltl_formula(rng, vocab, depth - 1));
    default:
      return atom();
  }
}

}  // namespace detail

// A random partial-information planning domain within the bounds. Every
// symbol table, effect slot, initial state and epistemic set is drawn from a
// single deterministic stream seeded by bounds.rng_seed.
inline Ppd random_ppd(const DomainBounds& bounds) {
  bounds.validate();
  detail::SplitMix64 rng(bounds.rng_seed);
  Ppd ppd;
  int n_agents = rng.range1(bounds.max_agents);
  int n_actions = rng.range1(bounds.max_actions);  // incl. skip
  int n_props = rng.range1(bounds.max_props);
  for (int j = 1; j <= n_agents; ++j) ppd.vocab.declare_agent("ag" + std::to_string(j));
  for (int j = 1; j < n_actions; ++j) ppd.vocab.declare_action("act" + std::to_string(j));
  for (int j = 1; j <= n_props; ++j) ppd.vocab.declare_prop("p" + std::to_string(j));

  for (AgentId i = 0; i < n_agents; ++i) {
    for (ActionId a = 1; a < ppd.vocab.action_count(); ++a) {
      for (PropId p = 0; p < n_props; ++p) {
        if (rng.chance(bounds.effect_density)) {
          ppd.theory.set_positive(i, a, p, detail::random_pl_formula(rng, ppd.vocab, 2), ppd.vocab);
        }
        if (rng.chance(bounds.effect_density)) {
          ppd.theory.set_negative(i, a, p, detail::random_pl_formula(rng, ppd.vocab, 2), ppd.vocab);
        }
      }
    }
  }

  std::uint64_t state_space = std::uint64_t{1} << n_props;
  ppd.init.bits = rng.below(state_space);
  ppd.epistemic.assign(static_cast<std::size_t>(n_agents), {});
  for (AgentId i = 0; i < n_agents; ++i) {
    auto& sets = ppd.epistemic[static_cast<std::size_t>(i)];
    sets.push_back(ppd.init);
    int extras = static_cast<int>(rng.below(3));
    for (int e = 0; e < extras; ++e) {
      State s{rng.below(state_space)};
      bool present = false;
      for (const State& q : sets) present = present || q == s;
      if (!present) sets.push_back(s);
    }
  }
  ppd.validate();
  return ppd;
}

// Random outcome formula. Half the time the draw refuses constants at the
// root, so that trivially constant outcomes do not dominate a corpus.
inline Formula random_outcome(detail::SplitMix64& rng, const Vocabulary& vocab, int depth) {
  bool exclude_constants = rng.chance(0.5);
  for (;;) {
    Formula f = detail::random_ltl_formula(rng, vocab, depth);
    NodeKind root = f.node(f.root()).kind;
    if (exclude_constants && (root == NodeKind::True || root == NodeKind::False)) continue;
    return f;
  }
}

// One item of the randomized corpus: a domain, an outcome, a horizon and a
// few sampled full joint plans for the attribution-side checks.
struct CorpusItem {
  std::uint64_t seed = 0;
  Ppd ppd;
  int horizon = 1;
  Formula omega;
  std::vector<JointPlan> plans;
};

inline CorpusItem make_corpus_item(DomainBounds bounds, std::uint64_t seed) {
  bounds.rng_seed = seed;
  CorpusItem item;
  item.seed = seed;
  item.ppd = random_ppd(bounds);
  detail::SplitMix64 rng(seed ^ 0xa5c152f6u);
  item.horizon = rng.range1(bounds.max_horizon);
  item.omega = random_outcome(rng, item.ppd.vocab, bounds.formula_depth);
  int n = item.ppd.vocab.agent_count();
  for (int sample = 0; sample < 3; ++sample) {
    std::vector<AgentId> coalition;
    std::vector<std::vector<ActionId>> seqs;
    for (AgentId i = 0; i < n; ++i) {
      coalition.push_back(i);
      std::vector<ActionId> seq;
      for (int t = 0; t < item.horizon; ++t) {
        seq.push_back(static_cast<ActionId>(rng.below(item.ppd.vocab.action_count())));
      }
      seqs.push_back(std::move(seq));
    }
    item.plans.emplace_back(std::move(coalition), std::move(seqs), item.horizon);
  }
  return item;
}

}  // namespace resplan
