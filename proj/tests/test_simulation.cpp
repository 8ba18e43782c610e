#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include <induction/errors.hpp>
#include <induction/posterior.hpp>
#include <induction/simulation.hpp>

namespace induction {
namespace {

TEST(SimulateBernoulli, DegenerateCoins) {
  EXPECT_EQ(simulate_bernoulli(1.0, 100, 3, 10).final_checkpoint().ratio, 1.0);
  EXPECT_EQ(simulate_bernoulli(0.0, 100, 3, 10).final_checkpoint().ratio, 0.0);
}

TEST(SimulateBernoulli, FairCoinConverges) {
  const auto t = simulate_bernoulli(0.5, 100'000, 42, 1000);
  EXPECT_LT(std::abs(t.final_checkpoint().ratio - 0.5), 0.01);
}

TEST(SimulateBernoulli, CheckpointsAtStrideAndEnd) {
  const auto t = simulate_bernoulli(0.3, 1005, 1, 100);
  ASSERT_EQ(t.checkpoints.size(), 11u);
  EXPECT_EQ(t.checkpoints.front().n, 100u);
  EXPECT_EQ(t.checkpoints.back().n, 1005u);
  Count successes = 0;
  std::size_t next = 0;
  for (Count n = 1; n <= t.outcomes.size(); ++n) {
    successes += t.outcomes[n - 1];
    if (next < t.checkpoints.size() && t.checkpoints[next].n == n) {
      EXPECT_EQ(t.checkpoints[next].successes, successes);
      EXPECT_EQ(t.checkpoints[next].ratio, static_cast<double>(successes) / n);
      ++next;
    }
  }
  EXPECT_EQ(next, t.checkpoints.size());
}

TEST(SimulateBernoulli, BitIdenticalForSeed) {
  const auto a = simulate_bernoulli(0.37, 20'000, 555, 7);
  const auto b = simulate_bernoulli(0.37, 20'000, 555, 7);
  EXPECT_EQ(a.outcomes, b.outcomes);
  ASSERT_EQ(a.checkpoints.size(), b.checkpoints.size());
  for (std::size_t i = 0; i < a.checkpoints.size(); ++i) {
    EXPECT_EQ(a.checkpoints[i].ratio, b.checkpoints[i].ratio);
  }
  EXPECT_NE(simulate_bernoulli(0.37, 20'000, 556, 7).outcomes, a.outcomes);
}

TEST(SimulateBernoulli, RejectsBadInputs) {
  EXPECT_THROW(simulate_bernoulli(1.5, 10, 1, 1), DomainError);
  EXPECT_THROW(simulate_bernoulli(0.5, 0, 1, 1), DomainError);
  EXPECT_THROW(simulate_bernoulli(0.5, 10, 1, 0), DomainError);
}

TEST(LlnConfidence, AllSuccessTrajectoryClampsToUnit) {
  const auto t = simulate_bernoulli(1.0, 10, 0, 10);
  const auto points = lln_confidence_trajectory(t, 0.1);
  ASSERT_EQ(points.size(), 1u);
  EXPECT_EQ(points[0].n, 10u);
  EXPECT_NEAR(points[0].confidence, 1.0 - std::pow(0.9, 11), 1e-12);
}

TEST(LlnConfidence, FairCoinAtTenThousand) {
  const auto t = simulate_bernoulli(0.5, 10'000, 42, 1000);
  const auto points = lln_confidence_trajectory(t, 0.05);
  const auto& last = points.back();
  EXPECT_EQ(last.n, 10'000u);
  const Checkpoint& cp = t.final_checkpoint();
  const Evidence e(cp.n, cp.successes);
  const double oracle = posterior_cdf(e, cp.ratio + 0.05) - posterior_cdf(e, cp.ratio - 0.05);
  EXPECT_NEAR(last.confidence, oracle, 1e-12);
  EXPECT_GT(last.confidence, 0.99);
}

TEST(LlnConfidence, NondecreasingOverFinalCheckpoints) {
  const auto t = simulate_bernoulli(0.5, 10'000, 2024, 100);
  const auto points = lln_confidence_trajectory(t, 0.01);
  ASSERT_GE(points.size(), 10u);
  for (std::size_t i = points.size() - 9; i < points.size(); ++i) {
    EXPECT_GE(points[i].confidence, points[i - 1].confidence) << points[i].n;
  }
}

TEST(LlnConfidence, RejectsEpsilon) {
  const auto t = simulate_bernoulli(0.5, 10, 0, 1);
  EXPECT_THROW(lln_confidence_trajectory(t, 0.0), DomainError);
  EXPECT_THROW(lln_confidence_trajectory(t, 1.0), DomainError);
}

TEST(DemonConfig, Validation) {
  EXPECT_NO_THROW(DemonConfig{}.validate());
  DemonConfig bad;
  bad.lower_threshold = 0.56;
  EXPECT_THROW(bad.validate(), DomainError);
  DemonConfig out_of_range;
  out_of_range.p_high = 1.2;
  EXPECT_THROW(out_of_range.validate(), DomainError);
}

// Replays a trajectory and checks every cycle ends at the first trial after
// the warmup that reaches the regime's target threshold.
void expect_first_crossings(const DemonRun& run, const DemonConfig& cfg) {
  const auto& outcomes = run.trajectory.outcomes;
  Count successes = 0;
  std::size_t c = 0;
  bool rising_target = true;
  for (Count n = 1; n <= outcomes.size(); ++n) {
    successes += outcomes[n - 1];
    if (n <= cfg.warmup_trials) continue;
    const double ratio = static_cast<double>(successes) / static_cast<double>(n);
    const bool reached = rising_target ? ratio >= cfg.upper_threshold : ratio <= cfg.lower_threshold;
    if (c < run.cycles.size() && run.cycles[c].end_n == n) {
      EXPECT_TRUE(reached) << "cycle " << c << " ends without crossing at n=" << n;
      EXPECT_EQ(run.cycles[c].direction,
                rising_target ? CycleDirection::rising : CycleDirection::falling);
      rising_target = !rising_target;
      ++c;
    } else {
      EXPECT_FALSE(reached) << "missed crossing at n=" << n;
    }
  }
  EXPECT_EQ(c, run.cycles.size());
}

TEST(SimulateDemon, DefaultRunOscillatesWithGrowingCycles) {
  const DemonConfig cfg;
  const auto run = simulate_demon(cfg, 1'000'000, 7);
  ASSERT_GE(run.cycles.size(), 6u);
  expect_first_crossings(run, cfg);
  EXPECT_EQ(run.cycles.front().start_n, 0u);
  EXPECT_GT(run.cycles.front().end_n, cfg.warmup_trials);
  for (std::size_t i = 1; i < run.cycles.size(); ++i) {
    EXPECT_NE(run.cycles[i].direction, run.cycles[i - 1].direction);
    EXPECT_EQ(run.cycles[i].start_n, run.cycles[i - 1].end_n);
    EXPECT_GT(run.cycles[i].end_n, run.cycles[i].start_n);
  }
  for (std::size_t i = 2; i < run.cycles.size(); ++i) {
    EXPECT_GT(run.cycles[i].length(), run.cycles[i - 1].length());
  }
}

TEST(SimulateDemon, RatioKeepsReachingBothThresholds) {
  const auto run = simulate_demon(DemonConfig{}, 1'000'000, 7);
  Count successes = 0;
  double hi = 0.0, lo = 1.0;
  for (Count n = 1; n <= run.trajectory.outcomes.size(); ++n) {
    successes += run.trajectory.outcomes[n - 1];
    if (n <= 100'000) continue;
    const double r = static_cast<double>(successes) / static_cast<double>(n);
    hi = std::max(hi, r);
    lo = std::min(lo, r);
  }
  EXPECT_GE(hi, 0.549);
  EXPECT_LE(lo, 0.451);
}

TEST(SimulateDemon, DegenerateRegimesGiveDeterministicSawtooth) {
  DemonConfig cfg;
  cfg.p_high = 1.0;
  cfg.p_low = 0.0;
  cfg.p_initial = 1.0;
  cfg.warmup_trials = 0;
  const auto run = simulate_demon(cfg, 200, 0, 1);
  ASSERT_GE(run.cycles.size(), 3u);
  // heads at trial 1 (ratio 1 >= 0.55), tails until 1/n <= 0.45 at n = 3,
  // heads until (1 + j)/(3 + j) >= 0.55 at j = 2, i.e. n = 5.
  EXPECT_EQ(run.cycles[0].end_n, 1u);
  EXPECT_EQ(run.cycles[0].direction, CycleDirection::rising);
  EXPECT_EQ(run.cycles[1].end_n, 3u);
  EXPECT_EQ(run.cycles[2].end_n, 5u);
  expect_first_crossings(run, cfg);
  const auto other = simulate_demon(cfg, 200, 12345, 1);
  EXPECT_EQ(other.trajectory.outcomes, run.trajectory.outcomes);
}

TEST(SimulateDemon, RunShorterThanWarmupHasNoCycles) {
  const auto run = simulate_demon(DemonConfig{}, 10, 7);
  EXPECT_TRUE(run.cycles.empty());
  EXPECT_EQ(run.trajectory.outcomes.size(), 10u);
  EXPECT_EQ(run.trajectory.final_checkpoint().n, 10u);
}

TEST(SimulateDemon, RejectsBadInputs) {
  EXPECT_THROW(simulate_demon(DemonConfig{}, 0, 1), DomainError);
  DemonConfig cfg;
  cfg.p_low = 0.5;
  EXPECT_THROW(simulate_demon(cfg, 10, 1), DomainError);
}

TEST(AnalyzeCycles, Arithmetic) {
  EXPECT_TRUE(analyze_cycles({}).empty());
  const std::vector<CycleRecord> cycles = {{0, 0, 100, CycleDirection::rising},
                                           {1, 100, 400, CycleDirection::falling},
                                           {2, 400, 1300, CycleDirection::rising}};
  const auto g = analyze_cycles(cycles);
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g[0].length, 100u);
  EXPECT_FALSE(g[0].growth_ratio.has_value());
  EXPECT_DOUBLE_EQ(*g[1].growth_ratio, 3.0);
  EXPECT_DOUBLE_EQ(*g[2].growth_ratio, 3.0);
}

TEST(AnalyzeCycles, DemonGrowthNearThree) {
  const auto run = simulate_demon(DemonConfig{}, 1'000'000, 7);
  const auto g = analyze_cycles(run.cycles);
  std::vector<double> late;
  for (std::size_t i = g.size() / 2; i < g.size(); ++i) late.push_back(*g[i].growth_ratio);
  std::sort(late.begin(), late.end());
  const double median = late[late.size() / 2];
  EXPECT_GE(median, 2.0);
  EXPECT_LE(median, 4.0);
}

}  // namespace
}  // namespace induction
