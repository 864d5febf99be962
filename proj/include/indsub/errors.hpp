#pragma once

#include <stdexcept>
#include <string>

namespace indsub {

// Malformed or out-of-range user input. CLI exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Request exceeds a desk-scale cap. CLI exit code 2.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mathematically undefined request, e.g. inverting zero.
class DomainError : public InputError {
 public:
  using InputError::InputError;
};

// A conditional lemma was invoked with its hypothesis false.
class HypothesisError : public InputError {
 public:
  using InputError::InputError;
};

// A search whose success is guaranteed by a proved lemma came back empty,
// or a computed invariant contradicts one. CLI exit code 3.
class LemmaViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace indsub
