#pragma once

#include <stdexcept>
#include <string>

namespace qlink {

// Invalid input from a caller (bad spin, bad braid text, mismatched shapes).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operator shapes do not line up for the requested operation.
class ShapeError : public UsageError {
 public:
  using UsageError::UsageError;
};

// A self-check inside the library failed; indicates a construction bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qlink
