#pragma once

#include <stdexcept>
#include <string>

namespace allipoly {

// Cost-guard violation: the requested computation would exceed the library's
// exponential/factorial work caps and was not forced. CLI maps this to exit 2.
class guard_error : public std::runtime_error {
 public:
  explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input: edge lists, graph6 strings, catalog lines.
// CLI maps this to exit 1.
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace allipoly
