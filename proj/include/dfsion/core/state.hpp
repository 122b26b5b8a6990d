#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

#include <Eigen/Dense>

namespace dfsion {

using cplx = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

enum class Encoding { Logical, Physical };

// Each subsystem is two-dimensional: a pair qubit (logical) or an ion (physical).
struct Layout {
  Encoding encoding = Encoding::Logical;
  int subsystems = 0;

  std::size_t dim() const { return std::size_t{1} << subsystems; }
  bool operator==(const Layout&) const = default;

  static Layout logical(int pairs);
  static Layout physical(int ions);
};

// Normalized pure state. Immutable once built.
class PureState {
 public:
  // Throws NormError unless |amps| == 1 within tol::kConstruction, and
  // DimensionError if amps.size() != layout.dim().
  PureState(Layout layout, Vector amplitudes);

  // Scales `amplitudes` to unit norm. Throws NormError on a zero vector.
  static PureState normalized(Layout layout, Vector amplitudes);
  static PureState basis_state(Layout layout, std::size_t index);
  // PureState::logical_ket("10") == |1~0~>
  static PureState logical_ket(std::string_view label);
  // PureState::physical_ket("egge")
  static PureState physical_ket(std::string_view label);

  const Layout& layout() const { return layout_; }
  const Vector& amplitudes() const { return amplitudes_; }
  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  int subsystems() const { return layout_.subsystems; }
  cplx operator[](std::size_t i) const { return amplitudes_[static_cast<Eigen::Index>(i)]; }

  // <this|other>
  cplx inner(const PureState& other) const;
  double norm() const { return amplitudes_.norm(); }

 private:
  struct Unchecked {};
  PureState(Unchecked, Layout layout, Vector amplitudes);

  // Results of norm-preserving operations skip the construction check so that
  // rounding from long pipelines does not trip it.
  friend PureState make_state_unchecked(Layout, Vector);

  Layout layout_;
  Vector amplitudes_;
};

PureState make_state_unchecked(Layout layout, Vector amplitudes);

// Kronecker product; `a` occupies the most significant subsystems.
PureState tensor(const PureState& a, const PureState& b);

// |<a|b>|^2
double fidelity(const PureState& a, const PureState& b);

// Maps each pair |1~> -> |eg>, |0~> -> |ge>.
PureState embed_logical_to_physical(const PureState& s);

// Inverse of the embedding. Throws LayoutError if the state has weight above
// tol::kConstruction on any |ee>/|gg> pair sector.
PureState project_physical_to_logical(const PureState& s);

}  // namespace dfsion
