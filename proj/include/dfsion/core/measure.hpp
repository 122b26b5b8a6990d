#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dfsion/core/state.hpp"

namespace dfsion {

struct MeasurementRecord {
  // One e/g character per measured ion. A measured logical pair contributes
  // "eg" or "ge".
  std::string outcome_label;
  double probability = 0.0;
  // Renormalized state of the unmeasured subsystems, phase kept. When every
  // subsystem is measured this is a one-dimensional state whose single
  // amplitude is the phase of the collapsed branch.
  PureState post_state;
};

using Distribution = std::vector<MeasurementRecord>;

// Product-basis measurement of `targets`. One record per outcome with
// probability above tol::kZeroProbability, ordered by outcome index.
Distribution measure_distribution(const PureState& s, std::span<const int> targets);

inline Distribution measure_distribution(const PureState& s, std::initializer_list<int> targets) {
  return measure_distribution(s, std::span<const int>(targets.begin(), targets.size()));
}

// Draws one record per the Born weights using Rng(seed).
// Throws std::invalid_argument on an empty distribution.
const MeasurementRecord& sample_outcome(const Distribution& distribution, std::uint64_t seed);

}  // namespace dfsion
