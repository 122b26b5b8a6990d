#include "dfsion/teleport.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dfsion/core/apply.hpp"
#include "dfsion/core/errors.hpp"
#include "dfsion/core/measure.hpp"
#include "dfsion/core/rng.hpp"

namespace dfsion::teleport {

using namespace std::complex_literals;
using gates::Correction;

PureState make_input(double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("input phase must be finite");
  Vector v(2);
  v << 1.0, std::polar(1.0, theta);
  return PureState(Layout::logical(1), v / std::numbers::sqrt2);
}

PureState make_resource() {
  Vector v = Vector::Zero(4);
  v[1] = 1.0 / std::numbers::sqrt2;   // |1~0~>  = |egge>
  v[2] = -1i / std::numbers::sqrt2;   // |0~1~>  = |geeg>
  return PureState(Layout::logical(2), v);
}

TeleportSetup::TeleportSetup(double theta) : input_phase(theta), input(make_input(theta)), resource(make_resource()) {}

PureState TeleportSetup::joint() const { return tensor(input, resource); }

std::string_view to_string(TableProvenance p) {
  return p == TableProvenance::Derived ? "derived" : "paper-literal";
}

CorrectionTable::CorrectionTable(std::vector<std::pair<std::string, Correction>> entries, TableProvenance provenance)
    : entries_(std::move(entries)), provenance_(provenance) {
  if (entries_.size() != kOutcomeLabels.size()) throw std::invalid_argument("correction table needs four entries");
  for (auto label : kOutcomeLabels) {
    const auto hits = std::count_if(entries_.begin(), entries_.end(), [&](const auto& e) { return e.first == label; });
    if (hits != 1) throw std::invalid_argument("correction table must list outcome " + std::string(label) + " once");
  }
}

Correction CorrectionTable::lookup(std::string_view outcome) const {
  for (const auto& [label, c] : entries_) {
    if (label == outcome) return c;
  }
  throw std::invalid_argument("no correction for outcome '" + std::string(outcome) + "'");
}

CorrectionTable paper_literal_table() {
  return CorrectionTable({{"egeg", Correction::I},
                          {"gege", Correction::Z3},
                          {"geeg", Correction::X3X4},
                          {"egge", Correction::X3X4Z3}},
                         TableProvenance::PaperLiteral);
}

std::vector<BellOutcome> bell_measure(const PureState& joint, int first, int second) {
  if (joint.layout().encoding != Encoding::Logical) throw LayoutError("Bell measurement expects a logical register");
  const int targets[] = {first, second};
  const PureState pulsed = apply(gates::gate_r(kBellTheta).matrix, joint, targets);
  std::vector<BellOutcome> out;
  for (auto& rec : measure_distribution(pulsed, targets)) {
    out.push_back(BellOutcome{std::move(rec.outcome_label), rec.probability, std::move(rec.post_state)});
  }
  return out;
}

BellOutcome bell_measure_sampled(const PureState& joint, std::uint64_t seed, int first, int second) {
  auto outcomes = bell_measure(joint, first, second);
  double total = 0.0;
  for (const auto& o : outcomes) total += o.probability;
  Rng rng(seed);
  const double u = rng.uniform() * total;
  double acc = 0.0;
  for (auto& o : outcomes) {
    acc += o.probability;
    if (u < acc) return std::move(o);
  }
  return std::move(outcomes.back());
}

namespace {

// Bell measurement on (A, C) of input tensor resource, corrected on B.
std::vector<OutcomeResult> run_protocol(const TeleportSetup& setup, const CorrectionTable* table) {
  std::vector<OutcomeResult> results;
  for (auto& o : bell_measure(setup.joint())) {
    OutcomeResult r{o.label, o.probability, Correction::I, 0.0, o.post_state};
    if (table) {
      r.correction = table->lookup(o.label);
      r.corrected = apply(gates::pauli_correction(r.correction), o.post_state, {0});
      r.fidelity = fidelity(r.corrected, setup.input);
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace

CorrectionTable derived_correction_table() {
  constexpr int kPhases = 8;
  std::vector<std::pair<std::string, Correction>> entries;
  for (auto label : kOutcomeLabels) {
    std::vector<Correction> survivors(std::begin(gates::kAllCorrections), std::end(gates::kAllCorrections));
    for (int k = 0; k < kPhases; ++k) {
      // Offset keeps the grid away from phases where two candidates coincide.
      const TeleportSetup setup(0.3 + 2.0 * std::numbers::pi * k / kPhases);
      const auto results = run_protocol(setup, nullptr);
      const auto it = std::find_if(results.begin(), results.end(), [&](const auto& r) { return r.label == label; });
      if (it == results.end()) throw std::logic_error("outcome " + std::string(label) + " never occurs");
      std::erase_if(survivors, [&](Correction c) {
        const auto fixed = apply(gates::pauli_correction(c), it->corrected, {0});
        return fidelity(fixed, setup.input) < 1.0 - kFidelityTolerance;
      });
    }
    if (survivors.size() != 1) {
      throw std::logic_error("no unique correction for outcome " + std::string(label));
    }
    entries.emplace_back(std::string(label), survivors.front());
  }
  return CorrectionTable(std::move(entries), TableProvenance::Derived);
}

TeleportReport teleport(double theta, const CorrectionTable& table, const ProtocolOptions& options) {
  const TeleportSetup setup(theta);
  TeleportReport report;
  report.theta = theta;
  report.trace = {
      "prepare input on pair A (ions 1,2)",
      "prepare resource on pairs B,C (ions 3,4,5,6) in storage",
      "shuttle pair C (ions 5,6) to accumulator: latency " + std::to_string(options.shuttle_latency_s) + " s",
      "Bell pulse R(pi/4) on pairs A,C (ions 1,2,5,6)",
      "detect ions 1,2,5,6",
      std::string("apply ") + std::string(to_string(table.provenance())) + " correction on pair B (ions 3,4)",
  };
  report.outcomes = run_protocol(setup, &table);
  report.min_fidelity = 1.0;
  for (const auto& r : report.outcomes) {
    report.min_fidelity = std::min(report.min_fidelity, r.fidelity);
    report.mean_fidelity += r.probability * r.fidelity;
    if (r.fidelity >= 1.0 - kFidelityTolerance) report.success_probability += r.probability;
  }
  return report;
}

double relative_phase(const PureState& pair) {
  if (pair.dim() != 2) throw DimensionError("relative phase needs a single pair");
  const double a = std::arg(pair[1] / pair[0]);
  return a < 0.0 ? a + 2.0 * std::numbers::pi : a;
}

}  // namespace dfsion::teleport
