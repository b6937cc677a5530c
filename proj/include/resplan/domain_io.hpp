#pragma once

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "resplan/errors.hpp"
#include "resplan/parser.hpp"
#include "resplan/plan_io.hpp"
#include "resplan/ppd.hpp"

namespace resplan {

// A parsed domain file plus any repairs the validator applied.
struct DomainFile {
  Ppd ppd;
  std::vector<std::string> warnings;
};

namespace detail {

inline bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

inline bool reserved_formula_word(const std::string& s) {
  return s == "X" || s == "U" || s == "G" || s == "F" || s == "do" || s == "true" || s == "false";
}

// Reads brace-delimited prop sets: `{ a b } {} { c }`.
inline std::vector<State> parse_state_sets(const std::string& text, const Vocabulary& vocab,
                                           int lineno) {
  std::vector<State> out;
  bool open = false;
  State current;
  auto fail = [&](const std::string& msg) {
    throw ValidationError("line " + std::to_string(lineno) + ": " + msg);
  };
  // Tokens may arrive glued to braces; split them apart first.
  std::vector<std::string> tokens;
  std::string word;
  for (char c : text) {
    if (c == '{' || c == '}') {
      if (!word.empty()) tokens.push_back(word), word.clear();
      tokens.push_back(std::string(1, c));
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      if (!word.empty()) tokens.push_back(word), word.clear();
    } else {
      word += c;
    }
  }
  if (!word.empty()) tokens.push_back(word);
  for (const std::string& t : tokens) {
    if (t == "{") {
      if (open) fail("nested '{'");
      open = true;
      current = State{};
    } else if (t == "}") {
      if (!open) fail("unmatched '}'");
      open = false;
      out.push_back(current);
    } else {
      if (!open) fail("proposition outside braces: " + t);
      current.set(vocab.props.require(t, "proposition"));
    }
  }
  if (open) fail("unclosed '{'");
  return out;
}

}  // namespace detail

// Domain files are line-oriented:
//   agents: A1 A2
//   props: crossed1 crossed2 collision
//   actions: F
//   init: {}
//   epistemic A1: {} { crossed2 }
//   effect+ A1 F crossed1: !( !crossed2 & do(A2,F) ) & !collision
// '#' starts a comment; skip always exists and may not be given effects;
// unspecified effects default to false; agents without an epistemic line
// consider only the initial state possible.
inline DomainFile parse_domain(std::string_view text) {
  DomainFile file;
  Ppd& ppd = file.ppd;
  bool saw_agents = false, saw_props = false, saw_actions = false, saw_init = false;
  std::vector<std::pair<AgentId, std::vector<State>>> epistemic_lines;
  std::set<std::string> effect_keys;

  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw ValidationError("line " + std::to_string(lineno) + ": " + msg);
  };

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = detail::strip_comment(raw);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) fail("expected a ':' separated section line");
    std::string head = line.substr(0, colon);
    std::string body = line.substr(colon + 1);
    std::vector<std::string> head_toks = detail::split_ws(head);
    if (head_toks.empty()) fail("missing section keyword");
    const std::string& keyword = head_toks[0];

    if (keyword == "agents") {
      if (head_toks.size() != 1) fail("'agents:' takes no arguments before the colon");
      if (saw_agents) fail("duplicate agents section");
      saw_agents = true;
      for (const std::string& name : detail::split_ws(body)) {
        if (!detail::valid_identifier(name)) fail("invalid agent name: " + name);
        ppd.vocab.declare_agent(name);
      }
      if (ppd.vocab.agent_count() == 0) fail("at least one agent is required");
    } else if (keyword == "props") {
      if (saw_props) fail("duplicate props section");
      saw_props = true;
      for (const std::string& name : detail::split_ws(body)) {
        if (!detail::valid_identifier(name)) fail("invalid proposition name: " + name);
        if (detail::reserved_formula_word(name)) fail("reserved word cannot name a proposition: " + name);
        ppd.vocab.declare_prop(name);
      }
    } else if (keyword == "actions") {
      if (saw_actions) fail("duplicate actions section");
      saw_actions = true;
      for (const std::string& name : detail::split_ws(body)) {
        if (!detail::valid_identifier(name)) fail("invalid action name: " + name);
        ppd.vocab.declare_action(name);
      }
    } else if (keyword == "init") {
      if (saw_init) fail("duplicate init section");
      if (!saw_agents || !saw_props) fail("init must follow agents and props");
      saw_init = true;
      auto sets = detail::parse_state_sets(body, ppd.vocab, lineno);
      if (sets.size() != 1) fail("init takes exactly one brace-delimited prop set");
      ppd.init = sets[0];
    } else if (keyword == "epistemic") {
      if (head_toks.size() != 2) fail("expected 'epistemic <agent>:'");
      if (!saw_init) fail("epistemic sections must follow init");
      AgentId agent = ppd.vocab.agents.require(head_toks[1], "agent");
      for (const auto& [seen, _] : epistemic_lines) {
        if (seen == agent) fail("duplicate epistemic section for " + head_toks[1]);
      }
      auto sets = detail::parse_state_sets(body, ppd.vocab, lineno);
      if (sets.empty()) fail("epistemic sections need at least one state");
      epistemic_lines.emplace_back(agent, std::move(sets));
    } else if (keyword == "effect+" || keyword == "effect-") {
      if (head_toks.size() != 4) fail("expected 'effect+ <agent> <action> <prop>: <formula>'");
      if (!saw_agents || !saw_props || !saw_actions) {
        fail("effects must follow agents, props and actions");
      }
      AgentId agent = ppd.vocab.agents.require(head_toks[1], "agent");
      ActionId action = ppd.vocab.actions.require(head_toks[2], "action");
      PropId prop = ppd.vocab.props.require(head_toks[3], "proposition");
      if (!effect_keys.insert(head).second) fail("duplicate effect entry: " + head);
      Formula f;
      try {
        f = parse_formula(body, ParseMode::Propositional, ppd.vocab);
      } catch (const ParseError& e) {
        fail(std::string("in effect formula: ") + e.what());
      }
      if (keyword == "effect+") {
        ppd.theory.set_positive(agent, action, prop, std::move(f), ppd.vocab);
      } else {
        ppd.theory.set_negative(agent, action, prop, std::move(f), ppd.vocab);
      }
    } else {
      fail("unknown section: " + keyword);
    }
  }

  if (!saw_agents) throw ValidationError("domain file is missing the agents section");
  if (!saw_props) throw ValidationError("domain file is missing the props section");
  if (!saw_init) throw ValidationError("domain file is missing the init section");

  ppd.epistemic = Ppd::default_epistemic(ppd.vocab, ppd.init);
  for (auto& [agent, states] : epistemic_lines) {
    bool has_init = false;
    for (const State& s : states) has_init = has_init || s == ppd.init;
    if (!has_init) {
      states.insert(states.begin(), ppd.init);
      file.warnings.push_back("epistemic set for " + ppd.vocab.agents.name(agent) +
                              " did not include the initial state; it was added");
    }
    ppd.epistemic[static_cast<std::size_t>(agent)] = std::move(states);
  }
  ppd.validate();
  return file;
}

inline std::string format_state(const State& s, const Vocabulary& vocab) {
  std::vector<std::string> names;
  for (PropId p : s.props(vocab)) names.push_back(vocab.props.name(p));
  std::sort(names.begin(), names.end());
  if (names.empty()) return "{}";
  std::string out = "{";
  for (const auto& n : names) {
    out += ' ';
    out += n;
  }
  out += " }";
  return out;
}

// Canonical form: fixed section order, declaration-ordered symbol lists,
// effects sorted by (agent, action, prop, sign), canonical formula printing,
// default epistemic lines omitted. Re-parsing reproduces the same domain and
// re-serializing that is byte-identical.
inline std::string serialize_domain(const Ppd& ppd) {
  std::string out;
  auto names_line = [&](const char* label, const std::vector<std::string>& names, std::size_t from) {
    out += label;
    for (std::size_t j = from; j < names.size(); ++j) {
      out += ' ';
      out += names[j];
    }
    out += '\n';
  };
  names_line("agents:", ppd.vocab.agents.names(), 0);
  names_line("props:", ppd.vocab.props.names(), 0);
  names_line("actions:", ppd.vocab.actions.names(), 1);  // skip is implicit
  out += "init: " + format_state(ppd.init, ppd.vocab) + '\n';
  for (AgentId i = 0; i < ppd.vocab.agent_count(); ++i) {
    const auto& states = ppd.epistemic_for(i);
    if (states.size() == 1 && states[0] == ppd.init) continue;
    out += "epistemic " + ppd.vocab.agents.name(i) + ":";
    for (const State& s : states) {
      out += ' ';
      out += format_state(s, ppd.vocab);
    }
    out += '\n';
  }
  for (const auto& e : ppd.theory.sorted_entries()) {
    out += e.positive ? "effect+ " : "effect- ";
    out += ppd.vocab.agents.name(e.agent);
    out += ' ';
    out += ppd.vocab.actions.name(e.action);
    out += ' ';
    out += ppd.vocab.props.name(e.prop);
    out += ": ";
    out += e.formula->to_string(ppd.vocab);
    out += '\n';
  }
  return out;
}

}  // namespace resplan
