#pragma once

#include <stdexcept>
#include <string>

namespace ndorgs {

// Error raised by any stage on invalid input or unmet preconditions.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ndorgs
