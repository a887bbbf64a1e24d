#pragma once

#include <stdexcept>
#include <string>

namespace toricsheaf {

// Malformed or out-of-range input data (dimension mismatch, unsorted weights, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The computation is not defined for the given variety family.
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A constraint system with an infinite lower bound was handed to the enumerator.
class UnboundedSystemError : public InputError {
 public:
  using InputError::InputError;
};

// Two independent computations disagreed. Always a bug, never bad input.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace toricsheaf
