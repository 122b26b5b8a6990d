#pragma once

#include <array>
#include <cstdint>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "dfsion/core/state.hpp"
#include "dfsion/gates.hpp"

// State transfer from pair A = ions (1,2) to pair B = ions (3,4) using a
// resource entangled between B and C = ions (5,6).
//
// The three-pair register is always ordered (A, B, C).
namespace dfsion::teleport {

inline constexpr int kPairA = 0;
inline constexpr int kPairB = 1;
inline constexpr int kPairC = 2;

// R angle of the Bell-measurement pulse (t = pi / (2 Omega_eff)).
inline constexpr double kBellTheta = std::numbers::pi / 4.0;

// The four outcomes on ions (1,2,5,6), in measurement-index order.
inline constexpr std::array<std::string_view, 4> kOutcomeLabels = {"egeg", "egge", "geeg", "gege"};

// (|1~> + e^{i theta} |0~>) / sqrt2 on one pair.
PureState make_input(double theta);

// (|1~>_B |0~>_C - i |0~>_B |1~>_C) / sqrt2
PureState make_resource();

struct TeleportSetup {
  double input_phase = 0.0;
  PureState input;
  PureState resource;

  explicit TeleportSetup(double theta);
  // input (A) tensor resource (B, C)
  PureState joint() const;
};

enum class TableProvenance { Derived, PaperLiteral };
std::string_view to_string(TableProvenance p);

class CorrectionTable {
 public:
  // Throws std::invalid_argument unless every outcome label appears once.
  CorrectionTable(std::vector<std::pair<std::string, gates::Correction>> entries, TableProvenance provenance);

  gates::Correction lookup(std::string_view outcome) const;
  TableProvenance provenance() const { return provenance_; }
  const std::vector<std::pair<std::string, gates::Correction>>& entries() const { return entries_; }

 private:
  std::vector<std::pair<std::string, gates::Correction>> entries_;
  TableProvenance provenance_;
};

// egeg -> I, gege -> Z3, geeg -> X3X4, egge -> X3X4Z3, as printed.
CorrectionTable paper_literal_table();

// Finds, for every outcome, the one candidate correction that restores the
// input with unit fidelity across a grid of input phases. Throws
// std::logic_error if an outcome has no unique such correction.
CorrectionTable derived_correction_table();

struct BellOutcome {
  std::string label;  // ions of the two measured pairs, e.g. "egge"
  double probability = 0.0;
  PureState post_state;  // unmeasured pairs; for a two-pair input, the branch phase
};

// R(pi/4) on pairs (first, second) followed by a product measurement of both.
// Throws DimensionError/LayoutError for a malformed register.
std::vector<BellOutcome> bell_measure(const PureState& joint, int first = kPairA, int second = kPairC);
BellOutcome bell_measure_sampled(const PureState& joint, std::uint64_t seed, int first = kPairA,
                                 int second = kPairC);

struct OutcomeResult {
  std::string label;
  double probability = 0.0;
  gates::Correction correction = gates::Correction::I;
  double fidelity = 0.0;
  PureState corrected;
};

inline constexpr double kFidelityTolerance = 1e-9;

struct TeleportReport {
  double theta = 0.0;
  std::vector<OutcomeResult> outcomes;
  double min_fidelity = 0.0;
  // Probability-weighted average fidelity.
  double mean_fidelity = 0.0;
  // Total probability of outcomes whose fidelity is >= 1 - kFidelityTolerance.
  double success_probability = 0.0;
  std::vector<std::string> trace;
};

struct ProtocolOptions {
  // Shuttling ions 5 and 6 into the accumulator is a relabeling step; this
  // only annotates the trace.
  double shuttle_latency_s = 0.0;
};

TeleportReport teleport(double theta, const CorrectionTable& table, const ProtocolOptions& options = {});

// arg(a_0~ / a_1~) of a single-pair state, wrapped to [0, 2 pi).
double relative_phase(const PureState& pair);

}  // namespace dfsion::teleport
