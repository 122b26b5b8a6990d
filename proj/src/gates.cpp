#include "dfsion/gates.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dfsion/core/apply.hpp"
#include "dfsion/core/basis.hpp"
#include "dfsion/core/errors.hpp"

namespace dfsion::gates {

namespace {

using namespace std::complex_literals;

Unitary mat2(cplx a, cplx b, cplx c, cplx d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return Unitary(std::move(m));
}

double wrap_angle(double a) { return std::remainder(a, 2.0 * std::numbers::pi); }

}  // namespace

PairGate pair_gate(PairGateName name) {
  const double s = 1.0 / std::numbers::sqrt2;
  switch (name) {
    case PairGateName::H:
      return {name, mat2(s, -1i * s, -1i * s, s)};
    case PairGateName::P:
      return {name, mat2(1i, 0.0, 0.0, 1.0)};
    case PairGateName::Pinv:
      return {name, mat2(-1i, 0.0, 0.0, 1.0)};
    case PairGateName::X:
      return {name, mat2(0.0, 1.0, 1.0, 0.0)};
    case PairGateName::Z:
      return {name, mat2(1.0, 0.0, 0.0, -1.0)};
  }
  throw std::invalid_argument("unknown pair gate");
}

std::string_view to_string(PairGateName name) {
  switch (name) {
    case PairGateName::H: return "H";
    case PairGateName::P: return "P";
    case PairGateName::Pinv: return "Pinv";
    case PairGateName::X: return "X";
    case PairGateName::Z: return "Z";
  }
  return "?";
}

TwoPairGate gate_r(double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("R angle must be finite");
  const cplx c = std::cos(theta);
  const cplx s = -1i * std::sin(theta);
  Matrix m = Matrix::Zero(4, 4);
  // block {|1~1~>, |0~0~>}
  m(0, 0) = c;
  m(3, 3) = c;
  m(0, 3) = s;
  m(3, 0) = s;
  // block {|1~0~>, |0~1~>}
  m(1, 1) = c;
  m(2, 2) = c;
  m(1, 2) = s;
  m(2, 1) = s;
  return {theta, Unitary(std::move(m))};
}

Unitary embed_two_pair_physical(const Unitary& u) {
  if (u.dim() != 4) throw DimensionError("two-pair gate must be 4x4");
  Matrix m = Matrix::Identity(16, 16);
  Eigen::Index phys[4];
  for (std::size_t i = 0; i < 4; ++i) {
    const auto label = basis::logical_to_physical_label(basis::logical_label(i, 2));
    phys[i] = static_cast<Eigen::Index>(basis::physical_index(label));
  }
  for (Eigen::Index r = 0; r < 4; ++r) {
    for (Eigen::Index c = 0; c < 4; ++c) m(phys[r], phys[c]) = u.matrix()(r, c);
  }
  return Unitary(std::move(m));
}

GateSchedule::GateSchedule(int pairs, std::vector<ScheduleStep> steps)
    : pairs_(pairs), steps_(std::move(steps)) {
  if (steps_.empty()) throw std::invalid_argument("gate schedule is empty");
  if (pairs_ < 1 || pairs_ > basis::kMaxSubsystems) throw DimensionError("invalid register size");
  for (const auto& step : steps_) {
    if (step.op.dim() != (std::size_t{1} << step.targets.size())) {
      throw DimensionError("step " + step.name + " has a gate/target size mismatch");
    }
    for (std::size_t i = 0; i < step.targets.size(); ++i) {
      const int t = step.targets[i];
      if (t < 0 || t >= pairs_) throw DimensionError("step " + step.name + " targets pair out of range");
      for (std::size_t j = 0; j < i; ++j) {
        if (step.targets[j] == t) throw DimensionError("step " + step.name + " repeats a target");
      }
    }
  }
}

Unitary GateSchedule::compose() const {
  // Push each basis column through the schedule.
  const Layout layout = Layout::logical(pairs_);
  const auto d = static_cast<Eigen::Index>(layout.dim());
  Matrix m(d, d);
  for (Eigen::Index col = 0; col < d; ++col) {
    m.col(col) = apply_schedule(*this, PureState::basis_state(layout, static_cast<std::size_t>(col))).amplitudes();
  }
  return Unitary(std::move(m), tol::kPipeline);
}

PureState apply_schedule(const GateSchedule& schedule, const PureState& s) {
  if (s.layout() != Layout::logical(schedule.pairs())) {
    throw LayoutError("schedule register does not match the state layout");
  }
  PureState out = s;
  for (const auto& step : schedule.steps()) out = apply(step.op, out, step.targets);
  return out;
}

CnotConstruction cnot_sequence(double r_theta) {
  auto pair_step = [](PairGateName g, int pair) {
    return ScheduleStep{std::string(to_string(g)) + (pair == kPairA ? "_A" : "_B"), {pair}, pair_gate(g).matrix};
  };
  std::vector<ScheduleStep> steps;
  steps.push_back(pair_step(PairGateName::H, kPairB));
  steps.push_back(pair_step(PairGateName::P, kPairB));
  steps.push_back(ScheduleStep{"R", {kPairA, kPairB}, gate_r(r_theta).matrix});
  steps.push_back(pair_step(PairGateName::P, kPairB));
  steps.push_back(pair_step(PairGateName::H, kPairA));
  steps.push_back(pair_step(PairGateName::H, kPairB));
  steps.push_back(pair_step(PairGateName::Pinv, kPairB));
  GateSchedule schedule(2, std::move(steps));
  Unitary u = schedule.compose();
  return {std::move(schedule), std::move(u)};
}

Unitary ideal_cnot() {
  // Control |1~> on B flips A: |1~1~> <-> |0~1~>, |1~0~> and |0~0~> fixed.
  Matrix m = Matrix::Zero(4, 4);
  m(2, 0) = 1.0;
  m(0, 2) = 1.0;
  m(1, 1) = 1.0;
  m(3, 3) = 1.0;
  return Unitary(std::move(m));
}

TruthTableCheck check_cnot_truth_table(const Unitary& u) {
  if (u.dim() != 4) throw DimensionError("truth table check expects a 4x4 gate");
  // Rows as printed: |eg>12|ge>34, |ge>12|ge>34, |eg>12|eg>34, |ge>12|eg>34.
  const std::pair<const char*, const char*> table[] = {
      {"10", "10"}, {"00", "00"}, {"11", "01"}, {"01", "11"}};

  TruthTableCheck check;
  cplx phase_sum = 0.0;
  std::vector<Vector> images;
  std::vector<std::size_t> expected_index;
  for (const auto& [in, out] : table) {
    const auto i = basis::logical_index(in);
    const auto o = basis::logical_index(out);
    images.push_back(u.matrix().col(static_cast<Eigen::Index>(i)));
    expected_index.push_back(o);
    const cplx amp = images.back()[static_cast<Eigen::Index>(o)];
    phase_sum += amp;
    check.rows.push_back({basis::logical_to_physical_label(in), basis::logical_to_physical_label(out), amp, 0.0});
  }
  check.global_phase = std::abs(phase_sum) > 0.0 ? phase_sum / std::abs(phase_sum) : cplx{1.0, 0.0};

  for (std::size_t r = 0; r < check.rows.size(); ++r) {
    Vector target = Vector::Zero(4);
    target[static_cast<Eigen::Index>(expected_index[r])] = check.global_phase;
    check.rows[r].deviation = (images[r] - target).cwiseAbs().maxCoeff();
    check.max_deviation = std::max(check.max_deviation, check.rows[r].deviation);
  }
  for (std::size_t a = 0; a < check.rows.size(); ++a) {
    for (std::size_t b = a + 1; b < check.rows.size(); ++b) {
      const double d = std::abs(wrap_angle(std::arg(check.rows[a].amplitude) - std::arg(check.rows[b].amplitude)));
      check.phase_spread = std::max(check.phase_spread, d);
    }
  }
  return check;
}

Unitary logical_hadamard() { return pair_gate(PairGateName::P).matrix * pair_gate(PairGateName::H).matrix; }

Unitary pauli_correction(Correction c) {
  const auto x = pair_gate(PairGateName::X).matrix;
  const auto z = pair_gate(PairGateName::Z).matrix;
  switch (c) {
    case Correction::I: return Unitary::identity(2);
    case Correction::Z3: return z;
    case Correction::X3X4: return x;
    case Correction::X3X4Z3: return x * z;
  }
  throw std::invalid_argument("unknown correction");
}

std::string_view to_string(Correction c) {
  switch (c) {
    case Correction::I: return "I";
    case Correction::Z3: return "Z3";
    case Correction::X3X4: return "X3X4";
    case Correction::X3X4Z3: return "X3X4Z3";
  }
  return "?";
}

Correction parse_correction(std::string_view name) {
  for (auto c : kAllCorrections) {
    if (to_string(c) == name) return c;
  }
  throw std::invalid_argument("unknown correction '" + std::string(name) + "'");
}

}  // namespace dfsion::gates
