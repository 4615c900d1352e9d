#pragma once

#include <stdexcept>
#include <string>

namespace teichlab {

/// Thrown when an operation receives input violating its preconditions
/// (unknown ids, malformed tables, out-of-range parameters). Maps to
/// exit code 2 at the CLI boundary.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace teichlab
