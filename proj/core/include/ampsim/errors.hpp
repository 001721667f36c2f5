#pragma once

#include <stdexcept>
#include <string>

namespace ampsim {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A SmearingSpec (or other state) violates its construction invariants.
struct InvalidSpecError : Error {
  using Error::Error;
};

// A parameter is outside the mathematical domain of an operation.
struct DomainError : Error {
  using Error::Error;
};

// A quadrature or iterative scheme failed its internal consistency check.
struct ConvergenceError : Error {
  using Error::Error;
};

// Root bracketing failed (target value unreachable in the search interval).
struct BracketError : Error {
  using Error::Error;
};

// A sampling grid does not cover the support of the quantity requested.
struct CoverageError : Error {
  using Error::Error;
};

// A sampling grid is too coarse to resolve the structure requested.
struct ResolutionError : Error {
  using Error::Error;
};

// Fock-space truncation lost more probability than the caller allows.
struct TruncationError : Error {
  using Error::Error;
};

// A conditional state was requested for an outcome of vanishing probability.
struct ZeroProbabilityError : Error {
  using Error::Error;
};

}  // namespace ampsim
