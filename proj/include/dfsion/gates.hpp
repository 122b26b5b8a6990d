#pragma once

#include <complex>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "dfsion/core/state.hpp"
#include "dfsion/core/unitary.hpp"

// Gate set on pair-encoded qubits. All single-pair matrices are written in
// the (|1~>, |0~>) = (|eg>, |ge>) order; two-pair matrices in
// (|1~1~>, |1~0~>, |0~1~>, |0~0~>) order.
namespace dfsion::gates {

enum class PairGateName { H, P, Pinv, X, Z };

struct PairGate {
  PairGateName name;
  Unitary matrix;
};

// H = [[1, -i], [-i, 1]] / sqrt2   (both ions of the pair driven together)
// P = diag(i, 1)                   (pi/2 phase on |eg>)
// X, Z are the logical Paulis.
PairGate pair_gate(PairGateName name);
std::string_view to_string(PairGateName name);

struct TwoPairGate {
  double theta = 0.0;  // half-angle: Omega_eff * t / 2
  Unitary matrix;
};

// Pulse on two neighbouring pairs: couples |1~1~> <-> |0~0~> and
// |1~0~> <-> |0~1~>, each block [[cos, -i sin], [-i sin, cos]].
// Throws std::invalid_argument on a non-finite angle.
TwoPairGate gate_r(double theta);

// The R angle used in the CNOT sequence.
inline constexpr double kCnotTheta = 3.0 * std::numbers::pi / 4.0;

// Extends a two-pair gate to the 16-dim four-ion space. Acts as `u` on the
// encoded subspace and as identity on every ket with an |ee> or |gg> pair.
Unitary embed_two_pair_physical(const Unitary& u);

// A gate with the register pairs it acts on.
struct ScheduleStep {
  std::string name;
  std::vector<int> targets;
  Unitary op;
};

class GateSchedule {
 public:
  // Throws std::invalid_argument if `steps` is empty and DimensionError if a
  // step's targets do not fit `pairs`.
  GateSchedule(int pairs, std::vector<ScheduleStep> steps);

  int pairs() const { return pairs_; }
  const std::vector<ScheduleStep>& steps() const { return steps_; }

  // Full-register unitary of the schedule, first step rightmost.
  Unitary compose() const;

 private:
  int pairs_;
  std::vector<ScheduleStep> steps_;
};

PureState apply_schedule(const GateSchedule& schedule, const PureState& s);

// Register convention for the two-pair CNOT: pair 0 = A = ions (1,2) is the
// target, pair 1 = B = ions (3,4) is the control.
inline constexpr int kPairA = 0;
inline constexpr int kPairB = 1;

struct CnotConstruction {
  GateSchedule schedule;
  Unitary unitary;
};

// H_B, P_B, R(theta), P_B, H_A, H_B, P_B^-1. With theta = kCnotTheta the
// product is -1 times CNOT(control B, target A).
CnotConstruction cnot_sequence(double r_theta = kCnotTheta);

// CNOT(control B, target A) in the two-pair basis.
Unitary ideal_cnot();

struct TruthTableRow {
  std::string input;            // e.g. "egge" for |eg>_12 |ge>_34
  std::string expected_output;
  std::complex<double> amplitude;  // <expected|U|input>
  double deviation = 0.0;          // max |U|input> - phase * |expected>|
};

struct TruthTableCheck {
  std::vector<TruthTableRow> rows;
  std::complex<double> global_phase;
  double max_deviation = 0.0;
  // Largest pairwise difference between the per-row phases, in radians.
  double phase_spread = 0.0;
};

// Compares `u` with the four-row CNOT truth table up to one common phase.
TruthTableCheck check_cnot_truth_table(const Unitary& u);

// P * H: |eg> -> i(|eg> - |ge>)/sqrt2, |ge> -> (|ge> + |eg>)/sqrt2.
Unitary logical_hadamard();

enum class Correction { I, Z3, X3X4, X3X4Z3 };

inline constexpr Correction kAllCorrections[] = {Correction::I, Correction::Z3, Correction::X3X4,
                                                 Correction::X3X4Z3};

// Logical action of the Pauli corrections on pair (3,4). sigma_z^3 is diagonal
// +1 on |e>, -1 on |g>, so it acts as logical Z. X3X4Z3 applies Z first.
Unitary pauli_correction(Correction c);
std::string_view to_string(Correction c);
// Throws std::invalid_argument on an unknown name.
Correction parse_correction(std::string_view name);

}  // namespace dfsion::gates
