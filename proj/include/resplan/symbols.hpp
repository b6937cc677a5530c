#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "resplan/errors.hpp"

namespace resplan {

using PropId = int;
using AgentId = int;
using ActionId = int;

// The "do nothing" action. Always interned first, so it is always id 0.
inline constexpr ActionId kSkipAction = 0;
inline constexpr std::string_view kSkipName = "skip";

// States are stored as 64-bit masks, which caps the declared proposition set.
inline constexpr int kMaxProps = 64;

class SymbolTable {
 public:
  // Returns the existing id when the name was already interned.
  int intern(std::string_view name) {
    if (auto it = ids_.find(std::string(name)); it != ids_.end()) return it->second;
    int id = static_cast<int>(names_.size());
    names_.emplace_back(name);
    ids_.emplace(names_.back(), id);
    return id;
  }

  std::optional<int> find(std::string_view name) const {
    auto it = ids_.find(std::string(name));
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }

  int require(std::string_view name, std::string_view what) const {
    auto id = find(name);
    if (!id) {
      throw ValidationError("undeclared " + std::string(what) + ": " + std::string(name));
    }
    return *id;
  }

  const std::string& name(int id) const { return names_.at(static_cast<std::size_t>(id)); }
  int size() const { return static_cast<int>(names_.size()); }
  bool contains(std::string_view name) const { return ids_.count(std::string(name)) != 0; }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> ids_;
};

// Declaration-ordered symbol tables for one planning domain. `skip` is
// pre-interned in the action table; declared action names follow it.
struct Vocabulary {
  SymbolTable agents;
  SymbolTable props;
  SymbolTable actions;

  Vocabulary() { actions.intern(kSkipName); }

  int agent_count() const { return agents.size(); }
  int prop_count() const { return props.size(); }
  int action_count() const { return actions.size(); }

  PropId declare_prop(std::string_view name) {
    if (props.contains(name)) throw ValidationError("duplicate proposition: " + std::string(name));
    if (props.size() >= kMaxProps) {
      throw ValidationError("too many propositions (engine limit is 64)");
    }
    return props.intern(name);
  }

  AgentId declare_agent(std::string_view name) {
    if (agents.contains(name)) throw ValidationError("duplicate agent: " + std::string(name));
    return agents.intern(name);
  }

  ActionId declare_action(std::string_view name) {
    // Listing skip explicitly is accepted and keeps its reserved id.
    return actions.intern(name);
  }
};

}  // namespace resplan
