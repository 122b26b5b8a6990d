#include "dfsion/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "dfsion/core/errors.hpp"

namespace dfsion::dynamics {

namespace {

void require_positive(double v, const char* name) {
  if (!std::isfinite(v) || !(v > 0.0)) {
    throw ParameterError(std::string(name) + " must be positive and finite");
  }
}

// Sample density: at least 1000 points per slow cycle and 20 per fast
// (gap-frequency) oscillation.
std::size_t sample_count(double duration, double horizon_cycles, double gap) {
  const double per_slow = 1000.0 * horizon_cycles;
  const double per_fast = 20.0 * duration * gap / (2.0 * std::numbers::pi);
  return static_cast<std::size_t>(std::ceil(std::max(per_slow, per_fast)));
}

// Least-squares vertex of y ~ a + b x + c x^2, x measured from x0.
double quadratic_vertex(const std::vector<double>& t, const std::vector<double>& y, std::size_t lo,
                        std::size_t hi, double x0) {
  const double scale = std::max(t[hi] - t[lo], std::numeric_limits<double>::min());
  Eigen::MatrixXd a(static_cast<Eigen::Index>(hi - lo + 1), 3);
  Eigen::VectorXd b(a.rows());
  for (std::size_t i = lo; i <= hi; ++i) {
    const auto r = static_cast<Eigen::Index>(i - lo);
    const double x = (t[i] - x0) / scale;
    a(r, 0) = 1.0;
    a(r, 1) = x;
    a(r, 2) = x * x;
    b[r] = y[i];
  }
  const Eigen::Vector3d c = a.colPivHouseholderQr().solve(b);
  if (!(c[2] < 0.0)) return x0;
  return x0 - scale * c[1] / (2.0 * c[2]);
}

}  // namespace

TrapParams::TrapParams(double rabi, double lamb_dicke, double trap_freq, double detuning, int fock_n)
    : rabi_(rabi), lamb_dicke_(lamb_dicke), trap_freq_(trap_freq), detuning_(detuning), fock_n_(fock_n) {
  require_positive(rabi, "rabi");
  require_positive(lamb_dicke, "lamb_dicke");
  require_positive(trap_freq, "trap_freq");
  require_positive(detuning, "detuning");
  if (fock_n < 0) throw ParameterError("fock_n must be nonnegative");
  if (!(intermediate_gap() > 0.0)) throw ParameterError("2*trap_freq - detuning must be positive");
  validity_ratio_ = rabi_ * lamb_dicke_ / intermediate_gap();
  if (!(validity_ratio_ < 1.0)) {
    throw ParameterError("validity ratio " + std::to_string(validity_ratio_) + " must be below 1");
  }
}

double effective_rabi(const TrapParams& p) {
  const double coupling = p.rabi() * p.lamb_dicke();
  return (2.0 * p.fock_n() + 1.0) * coupling * coupling / p.intermediate_gap();
}

double LadderModel::perturbative_frequency() const {
  return 2.0 * std::abs(g_plus * g_plus - g_minus * g_minus) / gap;
}

double LadderModel::leakage_bound() const {
  const double g = std::max(g_plus, g_minus);
  return 1.5 * std::pow(2.0 * g / gap, 2);
}

LadderModel ladder_from_couplings(double gap, double g_plus, double g_minus) {
  require_positive(gap, "gap");
  if (!(g_plus >= 0.0) || !(g_minus >= 0.0)) throw ParameterError("ladder couplings must be nonnegative");
  LadderModel m;
  m.gap = gap;
  m.g_plus = g_plus;
  m.g_minus = g_minus;
  auto& h = m.hamiltonian;
  h.setZero();
  h(LadderModel::kUpper, LadderModel::kUpper) = gap;
  h(LadderModel::kLower, LadderModel::kLower) = -gap;
  for (auto end : {LadderModel::kInitial, LadderModel::kFinal}) {
    h(end, LadderModel::kUpper) = h(LadderModel::kUpper, end) = g_plus;
    h(end, LadderModel::kLower) = h(LadderModel::kLower, end) = g_minus;
  }
  return m;
}

LadderModel build_ladder(const TrapParams& p) {
  const double half = 0.5 * p.rabi() * p.lamb_dicke();
  const double n = p.fock_n();
  return ladder_from_couplings(p.intermediate_gap(), half * std::sqrt((n + 1.0) * (n + 2.0)),
                               half * std::sqrt(n * (n - 1.0)));
}

Propagator::Propagator(const Matrix& h) {
  if (h.rows() == 0 || h.rows() != h.cols()) throw std::invalid_argument("hamiltonian must be square");
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw std::invalid_argument("hamiltonian is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
}

Vector Propagator::evolve(const Vector& s0, double t) const {
  if (s0.size() != eigenvalues_.size()) throw DimensionError("state and hamiltonian dimensions differ");
  Vector c = eigenvectors_.adjoint() * s0;
  for (Eigen::Index k = 0; k < c.size(); ++k) c[k] *= std::polar(1.0, -eigenvalues_[k] * t);
  return eigenvectors_ * c;
}

PureState evolve(const Matrix& h, double t, const PureState& s0) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw std::invalid_argument("evolution time must be finite and >= 0");
  if (static_cast<std::size_t>(h.rows()) != s0.dim()) throw DimensionError("hamiltonian and state dimensions differ");
  return make_state_unchecked(s0.layout(), Propagator(h).evolve(s0.amplitudes(), t));
}

TransferScan scan_transfer(const LadderModel& ladder, double horizon_cycles) {
  if (!(horizon_cycles > 0.0) || !std::isfinite(horizon_cycles)) {
    throw std::invalid_argument("horizon_cycles must be positive");
  }
  const double predicted = ladder.perturbative_frequency();
  if (!(predicted > 0.0)) throw RegimeError("ladder has no effective transfer coupling");
  const double duration = horizon_cycles * 2.0 * std::numbers::pi / predicted;
  const std::size_t n = sample_count(duration, horizon_cycles, ladder.gap);

  const Propagator prop(ladder.hamiltonian.cast<cplx>());
  Vector s0 = Vector::Zero(4);
  s0[LadderModel::kInitial] = 1.0;

  TransferScan scan;
  scan.samples = n + 1;
  std::vector<double> t(n + 1), p_final(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    t[i] = duration * static_cast<double>(i) / static_cast<double>(n);
    const Vector s = prop.evolve(s0, t[i]);
    p_final[i] = std::norm(s[LadderModel::kFinal]);
    scan.max_leakage =
        std::max(scan.max_leakage, std::norm(s[LadderModel::kUpper]) + std::norm(s[LadderModel::kLower]));
    scan.max_norm_drift = std::max(scan.max_norm_drift, std::abs(s.norm() - 1.0));
  }

  // First hump: from the first rise above 0.5 until the transfer falls
  // back below 0.25.
  const auto rise = std::find_if(p_final.begin(), p_final.end(), [](double p) { return p > 0.5; });
  if (rise == p_final.end()) {
    throw RegimeError("transfer probability stays below 0.5: outside the perturbative regime");
  }
  const auto begin = static_cast<std::size_t>(rise - p_final.begin());
  const auto fall = std::find_if(rise, p_final.end(), [](double p) { return p < 0.25; });
  const auto end = static_cast<std::size_t>(fall - p_final.begin());
  const auto peak = static_cast<std::size_t>(std::max_element(p_final.begin() + static_cast<std::ptrdiff_t>(begin),
                                                              p_final.begin() + static_cast<std::ptrdiff_t>(end)) -
                                             p_final.begin());
  if (peak + 1 >= p_final.size()) throw RegimeError("first transfer maximum not reached within the horizon");

  const double level = 0.75 * p_final[peak];
  std::size_t lo = peak;
  std::size_t hi = peak;
  for (std::size_t i = begin; i < end; ++i) {
    if (p_final[i] >= level) {
      lo = std::min(lo, i);
      hi = std::max(hi, i);
    }
  }
  lo = std::min(lo, peak - 1);
  hi = std::max(hi, peak + 1);
  const double t_max = quadratic_vertex(t, p_final, lo, hi, t[peak]);
  // P_final = sin^2(omega t / 2) peaks first at t = pi / omega.
  scan.frequency = std::numbers::pi / t_max;
  return scan;
}

double ladder_leakage(const LadderModel& ladder, double duration, std::size_t samples) {
  if (!(duration >= 0.0) || samples == 0) throw std::invalid_argument("invalid leakage scan range");
  const Propagator prop(ladder.hamiltonian.cast<cplx>());
  Vector s0 = Vector::Zero(4);
  s0[LadderModel::kInitial] = 1.0;
  double worst = 0.0;
  for (std::size_t i = 0; i <= samples; ++i) {
    const Vector s = prop.evolve(s0, duration * static_cast<double>(i) / static_cast<double>(samples));
    worst = std::max(worst, std::norm(s[LadderModel::kUpper]) + std::norm(s[LadderModel::kLower]));
  }
  return worst;
}

namespace {

void require_oracle_regime(const TrapParams& p) {
  if (p.validity_ratio() > kOracleMaxRatio) {
    throw RegimeError("validity ratio " + std::to_string(p.validity_ratio()) +
                      " exceeds the oracle limit; outside the perturbative regime");
  }
}

}  // namespace

double oracle_frequency(const TrapParams& p, double horizon_cycles) {
  require_oracle_regime(p);
  return scan_transfer(build_ladder(p), horizon_cycles).frequency;
}

double max_leakage(const TrapParams& p, double horizon_cycles) {
  require_oracle_regime(p);
  return scan_transfer(build_ladder(p), horizon_cycles).max_leakage;
}

double dressed_doublet_gap(const LadderModel& ladder) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(ladder.hamiltonian);
  const auto& values = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();
  // The two eigenvectors with the most weight on initial + final.
  std::vector<std::pair<double, double>> weighted;
  for (Eigen::Index k = 0; k < 4; ++k) {
    const double w = vectors(LadderModel::kInitial, k) * vectors(LadderModel::kInitial, k) +
                     vectors(LadderModel::kFinal, k) * vectors(LadderModel::kFinal, k);
    weighted.emplace_back(w, values[k]);
  }
  std::sort(weighted.begin(), weighted.end(), [](auto a, auto b) { return a.first > b.first; });
  return std::abs(weighted[0].second - weighted[1].second);
}

double gate_time_cnot(const TrapParams& p) { return 1.5 * std::numbers::pi / effective_rabi(p); }

double bell_pulse_time(const TrapParams& p) { return std::numbers::pi / (2.0 * effective_rabi(p)); }

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Warn: return "warn";
    case Verdict::Fail: return "fail";
  }
  return "?";
}

ValidityDiagnostic validity_check(const TrapParams& p) {
  const double r = p.validity_ratio();
  Verdict v = Verdict::Fail;
  if (r <= kPassRatio) {
    v = Verdict::Pass;
  } else if (r <= kWarnRatio) {
    v = Verdict::Warn;
  }
  return {r, v};
}

DynamicsReport analyze(const TrapParams& p, double horizon_cycles) {
  require_oracle_regime(p);
  const auto scan = scan_transfer(build_ladder(p), horizon_cycles);
  DynamicsReport report;
  report.effective_rabi = effective_rabi(p);
  report.oracle_frequency = scan.frequency;
  report.relative_error = std::abs(scan.frequency - report.effective_rabi) / report.effective_rabi;
  report.max_leakage = scan.max_leakage;
  report.validity_ratio = p.validity_ratio();
  return report;
}

}  // namespace dfsion::dynamics
