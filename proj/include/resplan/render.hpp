#pragma once

#include <string>

#include "resplan/domain_io.hpp"
#include "resplan/plan_io.hpp"
#include "resplan/responsibility.hpp"

namespace resplan {

// One head line `KIND agent=NAME holds=BOOL`, then indented witness lines:
// states as sorted prop sets, plans in plan-file format, coalitions as sorted
// agent name lists. Witness plans and counter-plans replay through the CLI.
inline std::string render_verdict(const std::string& kind, AgentId agent, const Verdict& v,
                                  const Vocabulary& vocab) {
  std::string out = kind + " agent=" + vocab.agents.name(agent) +
                    " holds=" + (v.holds ? "true" : "false") + '\n';
  if (v.witness_state) {
    out += "  witness-state: " + format_state(*v.witness_state, vocab) + '\n';
  }
  if (v.witness_coalition) {
    std::vector<std::string> names;
    for (AgentId i : *v.witness_coalition) names.push_back(vocab.agents.name(i));
    std::sort(names.begin(), names.end());
    out += "  witness-coalition:";
    for (const auto& n : names) {
      out += ' ';
      out += n;
    }
    out += '\n';
  }
  if (v.witness_plan) {
    out += "  witness-plan:\n";
    out += format_plan(*v.witness_plan, vocab, "    ");
  }
  if (v.counter_plan) {
    out += "  counter-plan:\n";
    out += format_plan(*v.counter_plan, vocab, "    ");
  }
  return out;
}

}  // namespace resplan
