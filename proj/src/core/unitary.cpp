#include "dfsion/core/unitary.hpp"

#include <string>

#include "dfsion/core/errors.hpp"

namespace dfsion {

Unitary::Unitary(Matrix entries, double tolerance) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
    throw DimensionError("unitary must be a non-empty square matrix");
  }
  const double err = unitarity_error(entries_);
  if (!(err <= tolerance)) {
    throw NonUnitaryError("matrix deviates from unitarity by " + std::to_string(err));
  }
}

Unitary Unitary::identity(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return Unitary(Matrix::Identity(d, d));
}

Unitary Unitary::adjoint() const { return Unitary(entries_.adjoint(), tol::kPipeline); }

Unitary Unitary::operator*(const Unitary& rhs) const {
  if (dim() != rhs.dim()) throw DimensionError("product of unitaries with different dimensions");
  return Unitary(entries_ * rhs.entries_, tol::kPipeline);
}

Unitary Unitary::kron(const Unitary& rhs) const {
  const auto da = entries_.rows();
  const auto db = rhs.entries_.rows();
  Matrix out(da * db, da * db);
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index j = 0; j < da; ++j) {
      out.block(i * db, j * db, db, db) = entries_(i, j) * rhs.entries_;
    }
  }
  return Unitary(std::move(out), tol::kPipeline);
}

double Unitary::unitarity_error(const Matrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  const Matrix gram = m.adjoint() * m;
  return max_abs_diff(gram, Matrix::Identity(m.rows(), m.cols()));
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("matrix shapes differ");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace dfsion
