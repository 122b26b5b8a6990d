#include "dfsion/core/measure.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dfsion/core/basis.hpp"
#include "dfsion/core/errors.hpp"
#include "dfsion/core/rng.hpp"
#include "dfsion/core/tolerances.hpp"

namespace dfsion {

namespace {

std::string outcome_label(Encoding encoding, std::size_t outcome, std::size_t k) {
  std::string label;
  for (std::size_t j = 0; j < k; ++j) {
    const bool second = (outcome >> (k - 1 - j)) & 1U;
    if (encoding == Encoding::Logical) {
      label += second ? "ge" : "eg";
    } else {
      label += second ? 'g' : 'e';
    }
  }
  return label;
}

}  // namespace

Distribution measure_distribution(const PureState& s, std::span<const int> targets) {
  const int n = s.subsystems();
  const std::size_t k = targets.size();
  std::vector<int> target_bits(k);
  std::vector<bool> measured(static_cast<std::size_t>(n), false);
  for (std::size_t j = 0; j < k; ++j) {
    const int t = targets[j];
    if (t < 0 || t >= n) throw DimensionError("measurement target " + std::to_string(t) + " out of range");
    if (measured[static_cast<std::size_t>(t)]) throw DimensionError("repeated measurement target");
    measured[static_cast<std::size_t>(t)] = true;
    target_bits[j] = basis::bit_of(t, n);
  }
  std::vector<int> rest_bits;
  for (int q = 0; q < n; ++q) {
    if (!measured[static_cast<std::size_t>(q)]) rest_bits.push_back(basis::bit_of(q, n));
  }
  const int rest = static_cast<int>(rest_bits.size());
  const Layout post_layout{s.layout().encoding, rest};

  std::vector<Vector> branches(std::size_t{1} << k, Vector::Zero(static_cast<Eigen::Index>(post_layout.dim())));
  for (std::size_t i = 0; i < s.dim(); ++i) {
    std::size_t outcome = 0;
    for (std::size_t j = 0; j < k; ++j) outcome = (outcome << 1) | ((i >> target_bits[j]) & 1U);
    std::size_t local = 0;
    for (int bit : rest_bits) local = (local << 1) | ((i >> bit) & 1U);
    branches[outcome][static_cast<Eigen::Index>(local)] = s[i];
  }

  Distribution out;
  for (std::size_t outcome = 0; outcome < branches.size(); ++outcome) {
    const double p = branches[outcome].squaredNorm();
    if (p <= tol::kZeroProbability) continue;
    out.push_back(MeasurementRecord{outcome_label(s.layout().encoding, outcome, k), p,
                                    make_state_unchecked(post_layout, branches[outcome] / std::sqrt(p))});
  }
  return out;
}

const MeasurementRecord& sample_outcome(const Distribution& distribution, std::uint64_t seed) {
  if (distribution.empty()) throw std::invalid_argument("cannot sample an empty distribution");
  double total = 0.0;
  for (const auto& r : distribution) total += r.probability;
  Rng rng(seed);
  const double u = rng.uniform() * total;
  double acc = 0.0;
  for (const auto& r : distribution) {
    acc += r.probability;
    if (u < acc) return r;
  }
  return distribution.back();
}

}  // namespace dfsion
