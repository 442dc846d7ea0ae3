#pragma once

#include <stdexcept>
#include <string>

namespace babylon {

/// Thrown when a computation would exceed a configured size ceiling.
/// The CLI maps this to its own exit code so callers can tell a guard
/// trip from a genuine failure.
struct ResourceLimitError : std::runtime_error {
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace babylon
