#pragma once

#include <stdexcept>
#include <string>

namespace crosspack {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Quadrature, root bracketing or optimization failed to converge.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A gauge could not be constructed for the requested parameters
// (e.g. no admissible Jacobi degree below the search limit).
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace crosspack
