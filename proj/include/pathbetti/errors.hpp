#pragma once

#include <stdexcept>
#include <string>

namespace pathbetti {

// Thrown by enumeration-based routines when the requested computation
// would exceed the caller-supplied work budget.
struct WorkBudgetExceeded : std::runtime_error {
  explicit WorkBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace pathbetti
