#pragma once

#include <stdexcept>
#include <string>

namespace atomspec {

// Malformed or out-of-contract input: unknown identifiers, size caps exceeded,
// bad file contents.  The CLI maps this to exit code 2.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A computed result failed one of its own checks.  Never expected on valid
// input; indicates a bug, so callers should not catch it routinely.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace atomspec
