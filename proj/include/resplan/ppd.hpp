#pragma once

#include <vector>

#include "resplan/errors.hpp"
#include "resplan/model.hpp"
#include "resplan/symbols.hpp"

namespace resplan {

// A planning domain with partial information about the initial state: the
// action theory, the true initial state, and one epistemic set of candidate
// initial states per agent. The true initial state is always a member of
// every agent's set; sets keep the order they were declared in.
struct Ppd {
  Vocabulary vocab;
  ActionTheory theory;
  State init;
  std::vector<std::vector<State>> epistemic;  // indexed by AgentId

  const std::vector<State>& epistemic_for(AgentId i) const {
    if (i < 0 || i >= static_cast<AgentId>(epistemic.size())) {
      throw ValidationError("unknown agent in epistemic lookup");
    }
    return epistemic[static_cast<std::size_t>(i)];
  }

  void validate() const {
    if (vocab.agent_count() == 0) throw ValidationError("a domain needs at least one agent");
    if (epistemic.size() != static_cast<std::size_t>(vocab.agent_count())) {
      throw ValidationError("every agent needs an epistemic set");
    }
    for (AgentId i = 0; i < vocab.agent_count(); ++i) {
      const auto& states = epistemic[static_cast<std::size_t>(i)];
      if (states.empty()) throw ValidationError("epistemic sets may not be empty");
      bool has_init = false;
      for (const State& s : states) has_init = has_init || s == init;
      if (!has_init) {
        throw ValidationError("agent " + vocab.agents.name(i) +
                              " must consider the true initial state possible");
      }
    }
  }

  // The default epistemic assignment: every agent considers only the true
  // initial state possible.
  static std::vector<std::vector<State>> default_epistemic(const Vocabulary& vocab,
                                                           const State& init) {
    return std::vector<std::vector<State>>(static_cast<std::size_t>(vocab.agent_count()), {init});
  }
};

}  // namespace resplan
