#pragma once

#include <string>
#include <vector>

#include "resplan/fixtures.hpp"
#include "resplan/parser.hpp"
#include "resplan/plan_io.hpp"

namespace resplan::test {

// The junction domain with its symbol ids resolved once.
struct Junction {
  Ppd ppd = fixtures::junction();
  AgentId a1 = *ppd.vocab.agents.find("A1");
  AgentId a2 = *ppd.vocab.agents.find("A2");
  PropId crossed1 = *ppd.vocab.props.find("crossed1");
  PropId crossed2 = *ppd.vocab.props.find("crossed2");
  PropId collision = *ppd.vocab.props.find("collision");
  ActionId forward = *ppd.vocab.actions.find("F");

  Formula ltl(const std::string& text) const {
    return parse_formula(text, ParseMode::Ltl, ppd.vocab);
  }
  JointPlan plan(const std::string& text) const { return parse_plan(text, ppd.vocab); }
};

}  // namespace resplan::test
