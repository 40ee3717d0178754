#pragma once

#include <stdexcept>
#include <string>

namespace demb {

// Thrown when an input exceeds a module's documented size cap.
class capacity_error : public std::runtime_error {
 public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a checked invariant or inequality fails at runtime.
class violation_error : public std::runtime_error {
 public:
  explicit violation_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace demb
