#pragma once

#include <cstddef>
#include <string_view>

#include <Eigen/Dense>

#include "dfsion/core/state.hpp"

namespace dfsion::dynamics {

// Trap and laser parameters. Frequencies in rad/s.
class TrapParams {
 public:
  // Throws ParameterError unless rabi, lamb_dicke, trap_freq, detuning are
  // positive and finite, fock_n >= 0, 2*trap_freq - detuning > 0 and the
  // validity ratio rabi*lamb_dicke / (2*trap_freq - detuning) is below 1.
  TrapParams(double rabi, double lamb_dicke, double trap_freq, double detuning, int fock_n);

  double rabi() const { return rabi_; }
  double lamb_dicke() const { return lamb_dicke_; }
  double trap_freq() const { return trap_freq_; }
  double detuning() const { return detuning_; }
  int fock_n() const { return fock_n_; }

  // 2*nu - delta: energy of the virtual two-phonon intermediate states.
  double intermediate_gap() const { return 2.0 * trap_freq_ - detuning_; }
  // Omega*eta / (2*nu - delta)
  double validity_ratio() const { return validity_ratio_; }

  TrapParams with_fock(int n) const { return {rabi_, lamb_dicke_, trap_freq_, detuning_, n}; }

 private:
  double rabi_;
  double lamb_dicke_;
  double trap_freq_;
  double detuning_;
  int fock_n_;
  double validity_ratio_;
};

// (2n+1) (Omega*eta)^2 / (2*nu - delta)
double effective_rabi(const TrapParams& p);

// Four-level stand-in for the two interfering second-order paths:
//   0: |egeg, n>     (initial, energy 0)
//   1: |gggg, n+2>   (upper, +gap)
//   2: |eeee, n-2>   (lower, -gap)
//   3: |gege, n>     (final, energy 0)
// Initial and final couple to the upper level with g_plus and to the lower
// level with g_minus; there is no direct initial-final coupling.
struct LadderModel {
  static constexpr Eigen::Index kInitial = 0;
  static constexpr Eigen::Index kUpper = 1;
  static constexpr Eigen::Index kLower = 2;
  static constexpr Eigen::Index kFinal = 3;

  double gap = 0.0;
  double g_plus = 0.0;
  double g_minus = 0.0;
  Eigen::Matrix4d hamiltonian;

  // 2 (g_plus^2 - g_minus^2) / gap, the second-order transfer frequency.
  double perturbative_frequency() const;
  // 1.5 * (2 max(g_plus, g_minus) / gap)^2
  double leakage_bound() const;
};

// g_plus = (Omega*eta/2) sqrt((n+1)(n+2)), g_minus = (Omega*eta/2) sqrt(n(n-1)).
LadderModel build_ladder(const TrapParams& p);
// Ladder with explicit couplings. gap must be positive; couplings >= 0.
LadderModel ladder_from_couplings(double gap, double g_plus, double g_minus);

// exp(-i h t) via one Hermitian eigendecomposition, reusable across times.
class Propagator {
 public:
  // Throws std::invalid_argument if h is not square or deviates from
  // Hermitian by more than 1e-12 (relative to its largest entry).
  explicit Propagator(const Matrix& h);

  Vector evolve(const Vector& s0, double t) const;
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }

 private:
  Eigen::VectorXd eigenvalues_;
  Matrix eigenvectors_;
};

// exp(-i h t) s0. Throws std::invalid_argument on t < 0.
PureState evolve(const Matrix& h, double t, const PureState& s0);

struct TransferScan {
  double frequency = 0.0;      // omega with P_final(t) ~ sin^2(omega t / 2)
  double max_leakage = 0.0;    // max over the scan of upper + lower population
  double max_norm_drift = 0.0;
  std::size_t samples = 0;
};

// Evolves the ladder from the initial level for `horizon_cycles` periods of
// the perturbative frequency and extracts the transfer frequency from the
// first maximum of P_final. The maximum is refined with a least-squares
// quadratic over the part of the first hump above 75% of its peak, which
// averages out the fast ripple at the gap frequency.
//
// Throws RegimeError if P_final never exceeds 0.5 or the first maximum does
// not close inside the horizon. No validity-ratio precondition is applied.
TransferScan scan_transfer(const LadderModel& ladder, double horizon_cycles);

// Max intermediate population over [0, duration] on `samples` + 1 points.
double ladder_leakage(const LadderModel& ladder, double duration, std::size_t samples);

inline constexpr double kOracleMaxRatio = 0.1;

// Oracle frequency for the closed form. Throws RegimeError if the validity
// ratio exceeds kOracleMaxRatio, plus whatever scan_transfer throws.
double oracle_frequency(const TrapParams& p, double horizon_cycles = 1.5);
double max_leakage(const TrapParams& p, double horizon_cycles = 1.5);

// Gap between the two dressed levels that connect to initial/final, from a
// full diagonalization. Matches the transfer frequency when g_minus = 0.
double dressed_doublet_gap(const LadderModel& ladder);

// (3 pi / 2) / effective_rabi
double gate_time_cnot(const TrapParams& p);
// pi / (2 effective_rabi)
double bell_pulse_time(const TrapParams& p);

enum class Verdict { Pass, Warn, Fail };
std::string_view to_string(Verdict v);

inline constexpr double kPassRatio = 0.05;
inline constexpr double kWarnRatio = 0.2;

struct ValidityDiagnostic {
  double ratio = 0.0;
  Verdict verdict = Verdict::Pass;
};

// pass if r <= 0.05, warn if r <= 0.2, fail above.
ValidityDiagnostic validity_check(const TrapParams& p);

struct DynamicsReport {
  double effective_rabi = 0.0;
  double oracle_frequency = 0.0;
  double relative_error = 0.0;
  double max_leakage = 0.0;
  double validity_ratio = 0.0;
};

DynamicsReport analyze(const TrapParams& p, double horizon_cycles = 1.5);

}  // namespace dfsion::dynamics
