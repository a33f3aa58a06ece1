#pragma once

#include <stdexcept>
#include <string>

namespace mgs {

// Bad caller input: malformed graphs, dangling ids, violated preconditions.
struct InvalidInput : std::runtime_error {
  explicit InvalidInput(const std::string& msg) : std::runtime_error(msg) {}
};

// Instance exceeds a hard desk-scale cap (separation enumeration, exact solvers).
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace mgs
