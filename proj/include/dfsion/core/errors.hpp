#pragma once

#include <stdexcept>

namespace dfsion {

// Logical/physical layout mismatch, or an operation given the wrong encoding.
class LayoutError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Dimension or subsystem-index mismatch.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NormError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NonUnitaryError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Physical parameters that violate their invariants.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when the ladder oracle sees no initial-to-final transfer, i.e. the
// parameters sit outside the perturbative regime.
class RegimeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dfsion
