#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "dfsion/core/state.hpp"

// Dephasing of physical ion registers. The phase is put on |e>; |g> is
// untouched.
namespace dfsion::noise {

// Every ion's |e> component picks up e^{i phi}. Throws LayoutError on a
// logical state.
PureState collective_dephase(const PureState& s, double phi);

// Ion j's |e> component picks up e^{i phis[j]}. Throws DimensionError if
// phis.size() differs from the number of ions.
PureState independent_dephase(const PureState& s, std::span<const double> phis);

enum class DephaseMode { Collective, Independent };

struct DephaseSpec {
  DephaseMode mode = DephaseMode::Collective;
  double sigma = 0.0;         // std-dev of the Gaussian phase, radians
  std::size_t samples = 1;
  std::uint64_t seed = 0;

  // Throws std::invalid_argument if sigma < 0 or samples == 0.
  void validate() const;
};

struct EnsembleResult {
  double mean = 0.0;
  // Standard error of the mean; empty when samples == 1.
  std::optional<double> std_error;
};

// Samples are drawn in chunks of kChunkSize; chunk c uses
// Rng(derive_seed(seed, c)). Results depend only on the seed, never on how
// chunks are scheduled.
inline constexpr std::size_t kChunkSize = 4096;

EnsembleResult ensemble_fidelity(const PureState& s, const DephaseSpec& spec);

// (1 + exp(-sigma^2/2)) / 2: Gaussian average of cos^2(phi/2), the
// collective-dephasing fidelity of a single bare (|e> + |g>)/sqrt2 ion.
double bare_qubit_mean_fidelity(double sigma);

// (|e> + |g>) / sqrt2 on one ion.
PureState bare_superposition();

}  // namespace dfsion::noise
