#pragma once

#include <stdexcept>
#include <string>

namespace drinfeld {

// Bad user input: malformed level, non-irreducible Q, inconsistent options.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Precision or step budget ran out before an answer was certain.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed; always a bug, never user error.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace drinfeld
