#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "dfsion/core.hpp"
#include "test_support.hpp"

namespace dfsion {
namespace {

using namespace std::complex_literals;

TEST(Measure, BasisStateHasOneOutcome) {
  const auto d = measure_distribution(PureState::physical_ket("egeg"), {0, 1, 2, 3});
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].outcome_label, "egeg");
  EXPECT_DOUBLE_EQ(d[0].probability, 1.0);
  EXPECT_EQ(d[0].post_state.dim(), 1u);
}

TEST(Measure, EqualSuperposition) {
  Vector v = Vector::Zero(16);
  v[basis::physical_index("egeg")] = 1.0;
  v[basis::physical_index("gege")] = 1i;
  const auto d = measure_distribution(PureState::normalized(Layout::physical(4), v), {0, 1, 2, 3});
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0].outcome_label, "egeg");
  EXPECT_EQ(d[1].outcome_label, "gege");
  EXPECT_NEAR(d[0].probability, 0.5, 1e-15);
  EXPECT_NEAR(d[1].probability, 0.5, 1e-15);
  // Branch phase survives in the one-dimensional post-state.
  EXPECT_NEAR(std::abs(d[1].post_state[0] - 1i), 0.0, 1e-15);
}

TEST(Measure, LogicalPairsReportIonLabels) {
  const auto d = measure_distribution(PureState::logical_ket("101"), {0, 2});
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].outcome_label, "egeg");
  EXPECT_EQ(d[0].post_state.amplitudes(), PureState::logical_ket("0").amplitudes());
}

TEST(Measure, PostStateOnRemainingSubsystems) {
  // (|e>|g> + |g>|e>)/sqrt2 measured on ion 0 leaves ion 1 in the other state.
  Vector v = Vector::Zero(4);
  v[1] = v[2] = 1.0;
  const auto d = measure_distribution(PureState::normalized(Layout::physical(2), v), {0});
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0].outcome_label, "e");
  EXPECT_NEAR(std::norm(d[0].post_state[basis::kGround]), 1.0, 1e-15);
  EXPECT_NEAR(std::norm(d[1].post_state[basis::kExcited]), 1.0, 1e-15);
}

TEST(Measure, ProbabilitiesSumToOneForRandomStates) {
  std::mt19937_64 gen(10);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + trial % 6;
    const auto s = testing::random_state(gen, Layout::physical(n));
    std::vector<int> targets;
    for (int q = 0; q < n; ++q) {
      if (gen() % 2 || targets.empty()) targets.push_back(q);
    }
    double total = 0.0;
    for (const auto& rec : measure_distribution(s, targets)) {
      total += rec.probability;
      ASSERT_NEAR(rec.post_state.norm(), 1.0, 1e-12);
    }
    ASSERT_NEAR(total, 1.0, 1e-10);
  }
}

TEST(Measure, InvalidTargets) {
  const auto s = PureState::physical_ket("eg");
  EXPECT_THROW(measure_distribution(s, {2}), DimensionError);
  EXPECT_THROW(measure_distribution(s, {0, 0}), DimensionError);
}

TEST(Sample, SingleOutcomeAlwaysDrawn) {
  const auto d = measure_distribution(PureState::physical_ket("ge"), {0, 1});
  for (std::uint64_t seed = 0; seed < 20; ++seed) EXPECT_EQ(sample_outcome(d, seed).outcome_label, "ge");
}

TEST(Sample, EmptyDistributionRejected) { EXPECT_THROW(sample_outcome(Distribution{}, 1), std::invalid_argument); }

TEST(Sample, SameSeedSameOutcome) {
  Vector v(2);
  v << 1.0, 1.0;
  const auto d = measure_distribution(PureState::normalized(Layout::physical(1), v), {0});
  for (std::uint64_t seed : {0ULL, 7ULL, 123456789ULL}) {
    EXPECT_EQ(sample_outcome(d, seed).outcome_label, sample_outcome(d, seed).outcome_label);
  }
}

TEST(Sample, FrequenciesWithinBinomialBounds) {
  Vector v = Vector::Constant(4, 0.5);
  const auto d = measure_distribution(PureState(Layout::physical(2), v), {0, 1});
  ASSERT_EQ(d.size(), 4u);
  constexpr int kDraws = 10000;
  std::map<std::string, int> counts;
  for (int i = 0; i < kDraws; ++i) ++counts[sample_outcome(d, derive_seed(99, static_cast<std::uint64_t>(i))).outcome_label];
  const double sigma = std::sqrt(kDraws * 0.25 * 0.75);
  for (const auto& rec : d) EXPECT_NEAR(counts[rec.outcome_label], kDraws * 0.25, 4.0 * sigma) << rec.outcome_label;
}

TEST(Rng, EngineStreamIsStandardMt19937_64) {
  // The standard fixes the 10000th output of a default-seeded mt19937_64.
  Rng rng(5489u);
  std::uint64_t x = 0;
  for (int i = 0; i < 10000; ++i) x = rng.next_u64();
  EXPECT_EQ(x, 9981545732273789042ULL);
}

TEST(Rng, UniformInUnitIntervalAndNormalMoments) {
  Rng rng(42);
  double sum = 0.0, sum_sq = 0.0;
  constexpr int kN = 100000;
  for (int i = 0; i < kN; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    const double z = rng.normal();
    sum += z;
    sum_sq += z * z;
  }
  EXPECT_NEAR(sum / kN, 0.0, 4.0 / std::sqrt(kN));
  EXPECT_NEAR(sum_sq / kN, 1.0, 4.0 * std::sqrt(2.0 / kN));
}

TEST(Rng, DerivedSeedsDiffer) {
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
  EXPECT_EQ(derive_seed(1, 5), derive_seed(1, 5));
}

}  // namespace
}  // namespace dfsion
