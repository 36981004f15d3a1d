#pragma once

#include <stdexcept>

namespace walshkit {

// Requested size exceeds what dense 2^n storage supports.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live on cubes of different dimension, or a table has the
// wrong length.
class DimensionMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameter outside the mathematical domain of the operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A level multiplier is undefined on a level that carries spectral mass
// (the 0^{iu} case).
class SingularMultiplierError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace walshkit
