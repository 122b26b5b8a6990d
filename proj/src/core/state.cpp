#include "dfsion/core/state.hpp"

#include <cmath>
#include <string>

#include "dfsion/core/basis.hpp"
#include "dfsion/core/errors.hpp"
#include "dfsion/core/tolerances.hpp"

namespace dfsion {

namespace {

Layout checked_layout(Encoding encoding, int n) {
  if (n < 0 || n > basis::kMaxSubsystems) {
    throw DimensionError("subsystem count " + std::to_string(n) + " out of range");
  }
  return Layout{encoding, n};
}

}  // namespace

Layout Layout::logical(int pairs) { return checked_layout(Encoding::Logical, pairs); }
Layout Layout::physical(int ions) { return checked_layout(Encoding::Physical, ions); }

PureState::PureState(Layout layout, Vector amplitudes)
    : PureState(Unchecked{}, layout, std::move(amplitudes)) {
  const double n = amplitudes_.norm();
  if (!(std::abs(n - 1.0) <= tol::kConstruction)) {
    throw NormError("state norm " + std::to_string(n) + " is not 1");
  }
}

PureState::PureState(Unchecked, Layout layout, Vector amplitudes)
    : layout_(layout), amplitudes_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amplitudes_.size()) != layout_.dim()) {
    throw DimensionError("amplitude count " + std::to_string(amplitudes_.size()) +
                         " does not match layout dimension " + std::to_string(layout_.dim()));
  }
}

PureState make_state_unchecked(Layout layout, Vector amplitudes) {
  return PureState(PureState::Unchecked{}, layout, std::move(amplitudes));
}

PureState PureState::normalized(Layout layout, Vector amplitudes) {
  const double n = amplitudes.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw NormError("cannot normalize a zero or non-finite vector");
  amplitudes /= n;
  return make_state_unchecked(layout, std::move(amplitudes));
}

PureState PureState::basis_state(Layout layout, std::size_t index) {
  if (index >= layout.dim()) {
    throw DimensionError("basis index " + std::to_string(index) + " out of range");
  }
  Vector v = Vector::Zero(static_cast<Eigen::Index>(layout.dim()));
  v[static_cast<Eigen::Index>(index)] = 1.0;
  return make_state_unchecked(layout, std::move(v));
}

PureState PureState::logical_ket(std::string_view label) {
  return basis_state(Layout::logical(static_cast<int>(label.size())), basis::logical_index(label));
}

PureState PureState::physical_ket(std::string_view label) {
  return basis_state(Layout::physical(static_cast<int>(label.size())), basis::physical_index(label));
}

cplx PureState::inner(const PureState& other) const {
  if (dim() != other.dim()) throw DimensionError("inner product of states with different dimensions");
  return amplitudes_.dot(other.amplitudes_);  // conjugates the left operand
}

PureState tensor(const PureState& a, const PureState& b) {
  if (a.layout().encoding != b.layout().encoding) {
    throw LayoutError("tensor product of logical and physical states");
  }
  const int n = a.subsystems() + b.subsystems();
  const Layout layout{a.layout().encoding, n};
  if (n > basis::kMaxSubsystems) throw DimensionError("tensor product exceeds the subsystem limit");
  Vector out(static_cast<Eigen::Index>(layout.dim()));
  const auto db = static_cast<Eigen::Index>(b.dim());
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(a.dim()); ++i) {
    out.segment(i * db, db) = a.amplitudes()[i] * b.amplitudes();
  }
  return make_state_unchecked(layout, std::move(out));
}

double fidelity(const PureState& a, const PureState& b) {
  if (a.dim() != b.dim()) throw DimensionError("fidelity of states with different dimensions");
  return std::norm(a.inner(b));
}

PureState embed_logical_to_physical(const PureState& s) {
  if (s.layout().encoding != Encoding::Logical) throw LayoutError("embedding expects a logical state");
  const int pairs = s.subsystems();
  const Layout layout = Layout::physical(2 * pairs);
  Vector out = Vector::Zero(static_cast<Eigen::Index>(layout.dim()));
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const auto label = basis::logical_to_physical_label(basis::logical_label(i, pairs));
    out[static_cast<Eigen::Index>(basis::physical_index(label))] = s[i];
  }
  return make_state_unchecked(layout, std::move(out));
}

PureState project_physical_to_logical(const PureState& s) {
  if (s.layout().encoding != Encoding::Physical) throw LayoutError("projection expects a physical state");
  if (s.subsystems() % 2 != 0) throw LayoutError("odd number of ions cannot form pairs");
  const int pairs = s.subsystems() / 2;
  const Layout layout = Layout::logical(pairs);
  Vector out = Vector::Zero(static_cast<Eigen::Index>(layout.dim()));
  double outside = 0.0;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const auto label = basis::physical_label(i, s.subsystems());
    bool encoded = true;
    for (std::size_t k = 0; k < label.size(); k += 2) encoded = encoded && label[k] != label[k + 1];
    if (encoded) {
      out[static_cast<Eigen::Index>(basis::logical_index(basis::physical_to_logical_label(label)))] = s[i];
    } else {
      outside += std::norm(s[i]);
    }
  }
  if (outside > tol::kConstruction) {
    throw LayoutError("state has weight " + std::to_string(outside) + " outside the pair-encoded subspace");
  }
  return make_state_unchecked(layout, std::move(out));
}

}  // namespace dfsion
