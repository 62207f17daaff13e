#pragma once

#include <stdexcept>
#include <string>

namespace qpart {

// Error hierarchy mirrored 1:1 onto C ABI status codes.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad or inconsistent parameters (nonpositive mass, unknown model name, ...).
struct ConfigError : Error {
  using Error::Error;
};

// Evaluation outside a function's mathematical domain (w=0 at T=0, ...).
struct DomainError : Error {
  using Error::Error;
};

// Requested quantity is a divergent integral; message names the offending tail.
struct DivergenceError : Error {
  using Error::Error;
};

// Quadrature failed to reach the requested tolerance within its budget.
struct AccuracyError : Error {
  using Error::Error;
};

// Linear algebra failure or loss of positivity in the bath eigenproblem.
struct NumericalError : Error {
  using Error::Error;
};

}  // namespace qpart
