#pragma once

#include <stdexcept>
#include <string>

namespace qsc {

// Violated preconditions on user-supplied input. Mapped to exit code 1 by the CLI.
class precondition_error : public std::invalid_argument {
  public:
    explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

// Internal cross-check failure: two routes that must agree did not.
// Mapped to exit code 2 by the CLI. Always indicates a bug, never bad input.
class verification_error : public std::logic_error {
  public:
    explicit verification_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace qsc
