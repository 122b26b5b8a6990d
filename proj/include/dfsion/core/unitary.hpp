#pragma once

#include <cstddef>

#include "dfsion/core/state.hpp"
#include "dfsion/core/tolerances.hpp"

namespace dfsion {

class Unitary {
 public:
  // Throws NonUnitaryError if max|U^dag U - I| > tolerance.
  explicit Unitary(Matrix entries, double tolerance = tol::kConstruction);

  static Unitary identity(std::size_t dim);

  const Matrix& matrix() const { return entries_; }
  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  cplx operator()(std::size_t row, std::size_t col) const {
    return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }

  Unitary adjoint() const;
  // Operator product: (a * b) applies b first.
  Unitary operator*(const Unitary& rhs) const;
  Unitary kron(const Unitary& rhs) const;

  double unitarity_error() const { return unitarity_error(entries_); }
  static double unitarity_error(const Matrix& m);

 private:
  Matrix entries_;
};

// Elementwise max |a - b|.
double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace dfsion
