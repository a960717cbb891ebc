#pragma once

#include <stdexcept>
#include <string>

namespace ellipsoidal {

// Bad caller input: malformed values, violated preconditions, unsupported sides.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A generator key that does not belong to the generator set it was used with.
class UnknownGenerator : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// An internal invariant failed (degree bookkeeping, index bookkeeping, ...).
// Never caused by user input alone.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidInput(message);
}

inline void ensure(bool condition, const std::string& message) {
  if (!condition) throw InvariantViolation(message);
}

}  // namespace ellipsoidal
