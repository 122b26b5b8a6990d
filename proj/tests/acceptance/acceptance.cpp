// Runs the seven end-to-end checks and prints one PASS/FAIL line each.
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "../test_support.hpp"
#include "dfsion/cli/commands.hpp"
#include "dfsion/cli/config.hpp"
#include "dfsion/core.hpp"
#include "dfsion/dynamics.hpp"
#include "dfsion/gates.hpp"
#include "dfsion/noise.hpp"
#include "dfsion/teleport.hpp"

namespace {

using namespace dfsion;
using namespace std::complex_literals;
constexpr double kPi = std::numbers::pi;
const double kS = 1.0 / std::numbers::sqrt2;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, std::string what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + std::move(what));
    }
  }
  void note(std::string what) { notes.push_back(std::move(what)); }
};

Outcome cnot_truth_table() {
  Outcome o;
  const auto c = gates::cnot_sequence();
  const auto check = gates::check_cnot_truth_table(c.unitary);
  o.require(check.max_deviation <= 1e-10, fmt::format("max deviation {:.3g}", check.max_deviation));
  o.require(std::abs(check.global_phase + 1.0) <= 1e-10, "global phase is not -1");
  for (const auto& row : check.rows) o.note(fmt::format("{} -> {}", row.input, row.expected_output));
  o.note(fmt::format("global phase ({:.3f}, {:.3f}), max deviation {:.2e}", check.global_phase.real(),
                     check.global_phase.imag(), check.max_deviation));
  return o;
}

Outcome bell_discrimination() {
  Outcome o;
  struct Case {
    const char* in_a;
    const char* in_b;
    cplx sign;
    const char* label;
    cplx printed;
  };
  // Printed mappings: (egeg + i gege) -> egeg, (egeg - i gege) -> -i gege,
  // (geeg + i egge) -> geeg, (geeg - i egge) -> i egge.
  const Case cases[] = {{"11", "00", 1i, "egeg", 1.0},
                        {"11", "00", -1i, "gege", -1i},
                        {"01", "10", 1i, "geeg", 1.0},
                        {"01", "10", -1i, "egge", 1i}};
  std::vector<std::string> labels;
  int matches = 0;
  for (const auto& c : cases) {
    Vector v = Vector::Zero(4);
    v[basis::logical_index(c.in_a)] = kS;
    v[basis::logical_index(c.in_b)] = c.sign * kS;
    const auto outcomes = teleport::bell_measure(PureState(Layout::logical(2), v), 0, 1);
    const teleport::BellOutcome* hit = nullptr;
    for (const auto& b : outcomes) {
      if (b.probability > 0.5) hit = &b;
    }
    if (!hit) {
      o.require(false, "no dominant outcome");
      continue;
    }
    o.require(std::abs(hit->probability - 1.0) <= 1e-10, fmt::format("{} probability {}", hit->label, hit->probability));
    o.require(hit->label == c.label, fmt::format("expected {}, got {}", c.label, hit->label));
    labels.push_back(hit->label);
    const cplx phase = hit->post_state[0];
    if (std::abs(phase - c.printed) <= 1e-10) {
      ++matches;
    } else {
      o.note(fmt::format("discrepancy: (|{}> {} i|{}>)/sqrt2 lands on ({:+.0f}{:+.0f}i)|{}>, printed as ({:+.0f}{:+.0f}i)|{}>",
                         basis::logical_to_physical_label(c.in_a), c.sign.imag() > 0 ? "+" : "-",
                         basis::logical_to_physical_label(c.in_b), phase.real(), phase.imag(), hit->label,
                         c.printed.real(), c.printed.imag(), hit->label));
      o.require(hit->label == std::string("egge") && std::abs(phase + 1i) <= 1e-10,
                "unexpected phase on " + hit->label);
    }
  }
  std::sort(labels.begin(), labels.end());
  o.require(std::unique(labels.begin(), labels.end()) == labels.end() && labels.size() == 4, "outcomes not distinct");
  o.require(matches == 3, fmt::format("{} of 4 printed phases match", matches));
  o.note(fmt::format("{} of 4 printed phase factors reproduced", matches));
  return o;
}

Outcome teleportation() {
  Outcome o;
  const auto table = teleport::derived_correction_table();
  for (int k = 0; k < 8; ++k) {
    const double theta = 2.0 * kPi * k / 8;
    const auto r = teleport::teleport(theta, table);
    for (const auto& out : r.outcomes) {
      o.require(std::abs(out.probability - 0.25) <= 1e-10, fmt::format("p({}) = {} at theta {}", out.label,
                                                                       out.probability, theta));
      o.require(out.fidelity >= 1.0 - 1e-9, fmt::format("fidelity {} for {} at theta {}", out.fidelity, out.label,
                                                        theta));
    }
  }
  std::string derived;
  for (const auto& [label, c] : table.entries()) derived += fmt::format(" {}->{}", label, gates::to_string(c));
  o.note("derived table:" + derived);

  const auto paper = teleport::paper_literal_table();
  int failing_rows = 0;
  std::vector<std::string> failing;
  for (const auto& [label, c] : paper.entries()) {
    int bad = 0;
    for (int k = 0; k < 8; ++k) {
      const auto r = teleport::teleport(2.0 * kPi * k / 8, paper);
      for (const auto& out : r.outcomes) bad += out.label == label && out.fidelity < 1.0 - 1e-9;
    }
    failing_rows += bad;
    if (bad) failing.push_back(fmt::format("{} ({} {}, fails {}/8 phases)", label, "printed", gates::to_string(c), bad));
  }
  std::string joined;
  for (const auto& f : failing) joined += (joined.empty() ? "" : "; ") + f;
  o.note(fmt::format("printed table: {} of 32 rows fail: {}", failing_rows, joined.empty() ? "none" : joined));
  return o;
}

Outcome rabi_oracle() {
  Outcome o;
  const dynamics::TrapParams base(1.0, 0.02, 1.0, 1.0, 0);
  for (int n : {0, 1, 2, 5}) {
    const auto p = base.with_fock(n);
    const auto l = dynamics::build_ladder(p);
    const double w = dynamics::oracle_frequency(p);
    const double rel = (w - dynamics::effective_rabi(p)) / dynamics::effective_rabi(p);
    const double leak = dynamics::max_leakage(p);
    o.require(std::abs(rel) <= 0.02, fmt::format("n={} relative error {:.3g}", n, rel));
    o.require(leak <= l.leakage_bound(), fmt::format("n={} leakage {:.3g} above {:.3g}", n, leak, l.leakage_bound()));
    o.note(fmt::format("n={}: relative error {:+.2e}, leakage {:.3e} (bound {:.3e})", n, rel, leak, l.leakage_bound()));
  }
  for (int n = 0; n <= 10; ++n) {
    const double ratio = dynamics::effective_rabi(base.with_fock(n)) / dynamics::effective_rabi(base);
    o.require(std::abs(ratio - (2 * n + 1)) <= 4 * std::numeric_limits<double>::epsilon() * (2 * n + 1),
              fmt::format("(2n+1) scaling off at n={}", n));
  }
  return o;
}

Outcome timing() {
  Outcome o;
  auto config = cli::paper_preset();
  config.validate();
  const auto result = cli::cmd_timing(config);
  const double t = dynamics::gate_time_cnot(config.trap());
  const double ratio = t / cli::kPaperCnotTime;
  o.require(ratio >= 0.5 && ratio <= 2.0, fmt::format("ratio {:.3f}", ratio));
  bool has_ratio = false, has_eta = false;
  for (const auto& [k, v] : result.report.summary) {
    has_ratio |= k == "ratio_to_paper";
    has_eta |= k == "eta_reading_N2";
    if (k == "note" || k.starts_with("eta_reading")) o.note(v);
  }
  o.require(has_ratio && has_eta, "report lacks the ratio or the eta readings");
  o.note(fmt::format("t_cnot = {:.4e} s, {:.2f}x the 7e-4 s reference", t, ratio));
  return o;
}

Outcome dephasing() {
  Outcome o;
  std::mt19937_64 gen(606);
  std::uniform_real_distribution<double> phi(-50.0, 50.0);
  double worst = 1.0;
  for (int pairs = 1; pairs <= 3; ++pairs) {
    for (int i = 0; i < 100; ++i) {
      const auto s = embed_logical_to_physical(testing::random_state(gen, Layout::logical(pairs)));
      worst = std::min(worst, fidelity(noise::collective_dephase(s, phi(gen)), s));
    }
  }
  const auto dfs = embed_logical_to_physical(teleport::make_input(0.0));
  for (double sigma : {0.5, 1.0, 2.0, 10.0}) {
    worst = std::min(worst, noise::ensemble_fidelity(dfs, {noise::DephaseMode::Collective, sigma, 10000, 1}).mean);
  }
  o.require(worst >= 1.0 - 1e-12, fmt::format("DFS fidelity {:.3g}", worst));
  o.note(fmt::format("worst DFS fidelity 1 - {:.1e}", 1.0 - worst));
  for (int i = 0; i < 3; ++i) {
    const double sigma = std::array{0.5, 1.0, 2.0}[static_cast<std::size_t>(i)];
    const auto r = noise::ensemble_fidelity(noise::bare_superposition(),
                                            {noise::DephaseMode::Collective, sigma, 10000, derive_seed(20240917, i)});
    const double expect = noise::bare_qubit_mean_fidelity(sigma);
    const double z = (r.mean - expect) / *r.std_error;
    o.require(std::abs(z) <= 4.0, fmt::format("sigma={} z={:.2f}", sigma, z));
    o.note(fmt::format("sigma={}: bare {:.5f} vs {:.5f} (z={:+.2f})", sigma, r.mean, expect, z));
  }
  return o;
}

Outcome property_suites() {
  Outcome o;
  constexpr int kCases = 100;
  std::mt19937_64 gen(707);
  std::uniform_real_distribution<double> angle(-20.0, 20.0);

  double unitarity = 0.0;
  for (int i = 0; i < kCases; ++i) {
    unitarity = std::max(unitarity, gates::gate_r(angle(gen)).matrix.unitarity_error());
    const auto name = static_cast<gates::PairGateName>(gen() % 5);
    const auto g = gates::pair_gate(name).matrix.kron(gates::pair_gate(gates::PairGateName::H).matrix);
    unitarity = std::max(unitarity, (g * gates::gate_r(angle(gen)).matrix * g).unitarity_error());
  }
  unitarity = std::max(unitarity, gates::cnot_sequence().unitary.unitarity_error());
  o.require(unitarity <= 1e-12, fmt::format("unitarity error {:.2e}", unitarity));

  double additivity = 0.0;
  bool blocks = true;
  for (int i = 0; i < kCases; ++i) {
    const double a = angle(gen), b = angle(gen);
    const auto ra = gates::gate_r(a).matrix;
    additivity = std::max(additivity, max_abs_diff((ra * gates::gate_r(b).matrix).matrix(),
                                                   gates::gate_r(a + b).matrix.matrix()));
    for (std::size_t r : {0u, 3u})
      for (std::size_t c : {1u, 2u}) blocks = blocks && ra(r, c) == cplx(0.0) && ra(c, r) == cplx(0.0);
  }
  o.require(additivity <= 1e-12, fmt::format("R additivity {:.2e}", additivity));
  o.require(blocks, "R leaks between blocks");

  double assoc = 0.0;
  for (int i = 0; i < kCases; ++i) {
    std::vector<gates::ScheduleStep> steps;
    const int count = 2 + i % 6;
    for (int k = 0; k < count; ++k) {
      if (gen() % 2) {
        steps.push_back({"U", {static_cast<int>(gen() % 3)}, Unitary(testing::random_unitary(gen, 2))});
      } else {
        const int a = static_cast<int>(gen() % 3);
        steps.push_back({"R", {a, (a + 1 + static_cast<int>(gen() % 2)) % 3}, gates::gate_r(angle(gen)).matrix});
      }
    }
    const auto split = static_cast<std::ptrdiff_t>(1 + gen() % static_cast<std::uint64_t>(count - 1));
    const gates::GateSchedule whole(3, steps);
    const gates::GateSchedule head(3, {steps.begin(), steps.begin() + split});
    const gates::GateSchedule tail(3, {steps.begin() + split, steps.end()});
    assoc = std::max(assoc, max_abs_diff(whole.compose().matrix(), (tail.compose() * head.compose()).matrix()));
  }
  o.require(assoc <= 1e-10, fmt::format("schedule associativity {:.2e}", assoc));

  double norm_err = 0.0;
  for (int i = 0; i < kCases; ++i) {
    const int pairs = 1 + static_cast<int>(gen() % 3);
    const auto s = testing::random_state(gen, Layout::logical(pairs));
    std::vector<int> targets;
    for (int k = 0; k < pairs; ++k)
      if (gen() % 2) targets.push_back(k);
    if (targets.empty()) targets.push_back(0);
    double total = 0.0;
    for (const auto& rec : measure_distribution(s, targets)) {
      total += rec.probability;
      if (rec.probability > 0) norm_err = std::max(norm_err, std::abs(rec.post_state.norm() - 1.0));
    }
    norm_err = std::max(norm_err, std::abs(total - 1.0));
  }
  o.require(norm_err <= 1e-10, fmt::format("measurement normalization {:.2e}", norm_err));

  bool deterministic = true;
  const auto joint = teleport::TeleportSetup(0.37).joint();
  const auto dist = measure_distribution(joint, {0, 2});
  const auto physical = embed_logical_to_physical(joint);
  for (std::uint64_t seed = 0; seed < kCases; ++seed) {
    Rng a(seed), b(seed);
    for (int k = 0; k < 16; ++k) deterministic = deterministic && a.next_u64() == b.next_u64();
    deterministic = deterministic && &sample_outcome(dist, seed) == &sample_outcome(dist, seed);
    deterministic = deterministic && teleport::bell_measure_sampled(joint, seed).label ==
                                         teleport::bell_measure_sampled(joint, seed).label;
    const noise::DephaseSpec spec{noise::DephaseMode::Independent, 0.7, 64, seed};
    deterministic = deterministic && noise::ensemble_fidelity(physical, spec).mean ==
                                         noise::ensemble_fidelity(physical, spec).mean;
  }
  o.require(deterministic, "seeded runs diverge");
  o.note(fmt::format("{} cases each: unitarity {:.1e}, additivity {:.1e}, associativity {:.1e}, normalization {:.1e}",
                     kCases, unitarity, additivity, assoc, norm_err));
  return o;
}

struct Criterion {
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"AC1 CNOT truth table", 1.0, cnot_truth_table},
      {"AC2 Bell discrimination", 1.0, bell_discrimination},
      {"AC3 teleportation", 1.0, teleportation},
      {"AC4 effective Rabi oracle", 10.0, rabi_oracle},
      {"AC5 paper timing", 0.1, timing},
      {"AC6 dephasing immunity", 5.0, dephasing},
      {"AC7 property suites", 10.0, property_suites},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(elapsed <= c.budget_s, fmt::format("runtime {:.3f} s over {} s", elapsed, c.budget_s));
    failures += !o.pass;
    fmt::print("{} {} ({:.3f} s)\n", o.pass ? "PASS" : "FAIL", c.name, elapsed);
    for (const auto& n : o.notes) fmt::print("    {}\n", n);
  }
  fmt::print("{} of {} criteria passed\n", std::size(criteria) - static_cast<std::size_t>(failures), std::size(criteria));
  return failures == 0 ? 0 : 1;
}
