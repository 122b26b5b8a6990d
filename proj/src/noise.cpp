#include "dfsion/noise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "dfsion/core/basis.hpp"
#include "dfsion/core/errors.hpp"
#include "dfsion/core/rng.hpp"

namespace dfsion::noise {

namespace {

void require_physical(const PureState& s) {
  if (s.layout().encoding != Encoding::Physical) throw LayoutError("dephasing acts on physical ion registers");
}

PureState apply_phases(const PureState& s, std::span<const double> phis) {
  const int n = s.subsystems();
  Vector out = s.amplitudes();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    double total = 0.0;
    for (int ion = 0; ion < n; ++ion) {
      if (((i >> basis::bit_of(ion, n)) & 1U) == basis::kExcited) total += phis[static_cast<std::size_t>(ion)];
    }
    out[static_cast<Eigen::Index>(i)] *= std::polar(1.0, total);
  }
  return make_state_unchecked(s.layout(), std::move(out));
}

}  // namespace

PureState collective_dephase(const PureState& s, double phi) {
  require_physical(s);
  const std::vector<double> phis(static_cast<std::size_t>(s.subsystems()), phi);
  return apply_phases(s, phis);
}

PureState independent_dephase(const PureState& s, std::span<const double> phis) {
  require_physical(s);
  if (phis.size() != static_cast<std::size_t>(s.subsystems())) {
    throw DimensionError("expected " + std::to_string(s.subsystems()) + " phases, got " + std::to_string(phis.size()));
  }
  return apply_phases(s, phis);
}

void DephaseSpec::validate() const {
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw std::invalid_argument("sigma must be finite and >= 0");
  if (samples == 0) throw std::invalid_argument("samples must be >= 1");
}

EnsembleResult ensemble_fidelity(const PureState& s, const DephaseSpec& spec) {
  require_physical(s);
  spec.validate();
  const auto ions = static_cast<std::size_t>(s.subsystems());
  std::vector<double> phis(ions);
  // Welford running mean/variance.
  double mean = 0.0;
  double m2 = 0.0;
  std::size_t seen = 0;
  for (std::size_t chunk = 0; chunk * kChunkSize < spec.samples; ++chunk) {
    Rng rng(derive_seed(spec.seed, chunk));
    const std::size_t count = std::min(kChunkSize, spec.samples - chunk * kChunkSize);
    for (std::size_t k = 0; k < count; ++k) {
      PureState noisy = s;
      if (spec.mode == DephaseMode::Collective) {
        noisy = collective_dephase(s, rng.normal(0.0, spec.sigma));
      } else {
        for (auto& phi : phis) phi = rng.normal(0.0, spec.sigma);
        noisy = independent_dephase(s, phis);
      }
      const double f = fidelity(s, noisy);
      ++seen;
      const double delta = f - mean;
      mean += delta / static_cast<double>(seen);
      m2 += delta * (f - mean);
    }
  }
  const double n = static_cast<double>(spec.samples);
  EnsembleResult result;
  result.mean = mean;
  if (spec.samples > 1) result.std_error = std::sqrt(m2 / (n - 1.0) / n);
  return result;
}

double bare_qubit_mean_fidelity(double sigma) { return 0.5 * (1.0 + std::exp(-0.5 * sigma * sigma)); }

PureState bare_superposition() {
  Vector v(2);
  v << 1.0, 1.0;
  return PureState::normalized(Layout::physical(1), v);
}

}  // namespace dfsion::noise
