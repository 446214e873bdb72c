#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcollatz {

/// Raised when an operation leaves the ring it is defined on: division by
/// zero, an even denominator, a precision mismatch.
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed textual input. `position()` is the byte offset of the failure.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace qcollatz
