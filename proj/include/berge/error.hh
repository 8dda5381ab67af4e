#pragma once

#include <stdexcept>
#include <string>

namespace berge {

/// Raised when an operation's precondition does not hold (bad cycle, vertex
/// on the wrong side, malformed file, ...).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace berge
