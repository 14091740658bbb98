#pragma once

#include <stdexcept>
#include <string>

namespace char2paley {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller-supplied input violates an operation's precondition
// (bad degree, reducible modulus, trace-0 parameter, x == y, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Zero passed where a field inverse is needed.
class DivisionByZero : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// x^2 + x = c asked for c of trace one.
class NoSolution : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Request exceeds a size cap, or falls in a case this library does not handle
// (e.g. Hamiltonian decomposition for composite q+1).
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A mathematical guarantee failed to hold; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace char2paley
