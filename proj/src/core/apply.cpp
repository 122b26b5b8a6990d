#include "dfsion/core/apply.hpp"

#include <string>
#include <vector>

#include "dfsion/core/basis.hpp"
#include "dfsion/core/errors.hpp"

namespace dfsion {

PureState apply(const Unitary& u, const PureState& s, std::span<const int> targets) {
  const int n = s.subsystems();
  const std::size_t k = targets.size();
  if (k == 0 || u.dim() != (std::size_t{1} << k)) {
    throw DimensionError("gate of dimension " + std::to_string(u.dim()) + " cannot act on " +
                         std::to_string(k) + " subsystem(s)");
  }
  std::size_t target_mask = 0;
  std::vector<std::size_t> bits(k);
  for (std::size_t j = 0; j < k; ++j) {
    const int t = targets[j];
    if (t < 0 || t >= n) {
      throw DimensionError("target " + std::to_string(t) + " out of range for " + std::to_string(n) +
                           " subsystems");
    }
    const std::size_t bit = std::size_t{1} << basis::bit_of(t, n);
    if (target_mask & bit) throw DimensionError("repeated target " + std::to_string(t));
    target_mask |= bit;
    bits[j] = bit;
  }

  // Spread a local gate index onto the target bits.
  auto scatter = [&](std::size_t local) {
    std::size_t global = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if ((local >> (k - 1 - j)) & 1U) global |= bits[j];
    }
    return global;
  };
  std::vector<std::size_t> offsets(u.dim());
  for (std::size_t local = 0; local < u.dim(); ++local) offsets[local] = scatter(local);

  const Vector& in = s.amplitudes();
  Vector out = Vector::Zero(in.size());
  const Matrix& m = u.matrix();
  const auto d = static_cast<Eigen::Index>(u.dim());
  for (std::size_t base = 0; base < s.dim(); ++base) {
    if (base & target_mask) continue;
    for (Eigen::Index r = 0; r < d; ++r) {
      cplx acc = 0.0;
      for (Eigen::Index c = 0; c < d; ++c) {
        acc += m(r, c) * in[static_cast<Eigen::Index>(base | offsets[static_cast<std::size_t>(c)])];
      }
      out[static_cast<Eigen::Index>(base | offsets[static_cast<std::size_t>(r)])] = acc;
    }
  }
  return make_state_unchecked(s.layout(), std::move(out));
}

}  // namespace dfsion
