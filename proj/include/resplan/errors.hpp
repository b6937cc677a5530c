#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace resplan {

// Raised when inputs violate a structural contract (undeclared symbols,
// coalition mismatches, malformed files). Never used for "query answered no".
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " (at offset " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

// The PDDL bridge refuses outcomes and theory entries it cannot express.
struct UnsupportedFragmentError : std::runtime_error {
  explicit UnsupportedFragmentError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace resplan
