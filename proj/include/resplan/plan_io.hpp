#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "resplan/errors.hpp"
#include "resplan/plan.hpp"
#include "resplan/symbols.hpp"

namespace resplan {

namespace detail {

inline std::string strip_comment(std::string_view line) {
  auto hash = line.find('#');
  std::string s(hash == std::string_view::npos ? line : line.substr(0, hash));
  auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

inline std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace detail

// Plan files: one line per agent, `AGENT: act act act ...`, '#' comments,
// all lines the same length. A single line describes an individual plan.
inline JointPlan parse_plan(std::string_view text, const Vocabulary& vocab) {
  std::vector<AgentId> agents;
  std::vector<std::vector<ActionId>> seqs;
  int horizon = -1;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = detail::strip_comment(raw);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw ValidationError("plan line " + std::to_string(lineno) + ": expected 'AGENT: actions'");
    }
    std::string name = detail::strip_comment(line.substr(0, colon));
    AgentId agent = vocab.agents.require(name, "agent");
    std::vector<ActionId> seq;
    for (const std::string& tok : detail::split_ws(line.substr(colon + 1))) {
      seq.push_back(vocab.actions.require(tok, "action"));
    }
    if (horizon < 0) {
      horizon = static_cast<int>(seq.size());
    } else if (static_cast<int>(seq.size()) != horizon) {
      throw ValidationError("plan line " + std::to_string(lineno) +
                            ": all agents need the same number of actions");
    }
    for (AgentId seen : agents) {
      if (seen == agent) {
        throw ValidationError("plan line " + std::to_string(lineno) + ": duplicate agent " + name);
      }
    }
    agents.push_back(agent);
    seqs.push_back(std::move(seq));
  }
  if (agents.empty()) throw ValidationError("plan file declares no agent lines");

  std::vector<std::size_t> order(agents.size());
  for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return agents[a] < agents[b]; });
  std::vector<AgentId> coalition;
  std::vector<std::vector<ActionId>> sorted;
  for (std::size_t j : order) {
    coalition.push_back(agents[j]);
    sorted.push_back(std::move(seqs[j]));
  }
  return JointPlan(std::move(coalition), std::move(sorted), horizon);
}

inline std::string format_plan(const JointPlan& plan, const Vocabulary& vocab,
                               std::string_view line_prefix = "") {
  std::string out;
  for (AgentId i : plan.coalition()) {
    out += line_prefix;
    out += vocab.agents.name(i);
    out += ':';
    for (ActionId a : plan.sequence(i)) {
      out += ' ';
      out += vocab.actions.name(a);
    }
    out += '\n';
  }
  return out;
}

}  // namespace resplan
