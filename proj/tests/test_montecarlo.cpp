#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "bfmle/bound.hpp"
#include "bfmle/montecarlo.hpp"
#include "oracles.hpp"

namespace bfmle {
namespace {

bool same(const SimResult& a, const SimResult& b) {
  return a.count_three == b.count_three && a.replications == b.replications && a.p_hat == b.p_hat &&
         a.std_err == b.std_err && a.degenerate_count == b.degenerate_count;
}

TEST(Rng, SplitMix64ReferenceOutput) {
  // First outputs of Vigna's splitmix64.c seeded with 0.
  SplitMix64 g(0);
  EXPECT_EQ(g(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(g(), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(g(), 0x06c45d188009454fULL);
}

TEST(Rng, StreamKeysDistinct) {
  std::set<std::uint64_t> keys;
  for (std::uint64_t g = 0; g < 10; ++g) {
    for (std::uint64_t i = 0; i < 1000; ++i) keys.insert(stream_key(42, g, i));
  }
  EXPECT_EQ(keys.size(), 10000u);
  EXPECT_NE(stream_key(1, 0, 0), stream_key(2, 0, 0));
}

TEST(Rng, NormalSamplerMomentsAndKolmogorovSmirnov) {
  NormalSampler z(stream_key(2024, 0, 0));
  const int n = 1000000;
  std::vector<double> v(n);
  double sum = 0.0;
  for (auto& x : v) {
    x = z();
    sum += x;
  }
  const double mean = sum / n;
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  EXPECT_LE(std::abs(mean), 0.005);
  EXPECT_LE(std::abs(ss / n - 1.0), 0.01);

  std::sort(v.begin(), v.end());
  double ks = 0.0;
  for (int i = 0; i < n; ++i) {
    const double f = oracle::normal_cdf(v[i]);
    ks = std::max({ks, (i + 1.0) / n - f, f - static_cast<double>(i) / n});
  }
  // Asymptotic 0.001 critical value of the one-sample KS statistic.
  EXPECT_LT(ks, 1.9495 / std::sqrt(static_cast<double>(n)));
}

TEST(EstimateProbThree, NullHypothesisLargeSamples) {
  SimConfig cfg{1000, 1000, 0.0, 0.0, 1.0, 1.0, 10000, 5, 1};
  const SimResult res = estimate_prob_three(cfg);
  EXPECT_LE(res.p_hat, 0.001);
  EXPECT_EQ(res.replications + res.degenerate_count, 10000u);
}

TEST(EstimateProbThree, FarAlternative) {
  SimConfig cfg{1000, 1000, 4.0, 0.0, 1.0, 1.0, 10000, 6, 1};
  const SimResult res = estimate_prob_three(cfg);
  EXPECT_GE(res.p_hat, 0.99);
  EXPECT_DOUBLE_EQ(res.p_hat, static_cast<double>(res.count_three) / res.replications);
  EXPECT_DOUBLE_EQ(res.std_err, std::sqrt(res.p_hat * (1 - res.p_hat) / res.replications));
}

TEST(EstimateProbThree, IndependentOfWorkerCount) {
  SimConfig cfg{15, 12, 2.0, 0.0, 1.0, 1.5, 20001, 99, 1};
  const SimResult one = estimate_prob_three(cfg);
  for (int w : {2, 3, 8, 64}) {
    cfg.workers = w;
    EXPECT_TRUE(same(one, estimate_prob_three(cfg))) << w;
  }
  cfg.workers = 1;
  EXPECT_TRUE(same(one, estimate_prob_three(cfg)));
  cfg.seed = 100;
  EXPECT_FALSE(same(one, estimate_prob_three(cfg)));
}

TEST(EstimateProbThree, AgreesWithPerReplicateOutcomes) {
  const SimConfig cfg{6, 9, 3.0, 0.0, 1.0, 1.0, 500, 3, 4};
  std::uint64_t three = 0;
  for (std::uint64_t i = 0; i < cfg.replications; ++i) three += simulate_replicate(cfg, 0, i) == ReplicateOutcome::Three;
  EXPECT_EQ(estimate_prob_three(cfg).count_three, three);
}

TEST(EstimateProbThree, RejectsInvalidConfig) {
  EXPECT_THROW(estimate_prob_three({1, 5, 0, 0, 1, 1, 10, 1, 1}), DomainError);
  EXPECT_THROW(estimate_prob_three({5, 5, 0, 0, 0, 1, 10, 1, 1}), DomainError);
  EXPECT_THROW(estimate_prob_three({5, 5, 0, 0, 1, 1, 0, 1, 1}), DomainError);
  EXPECT_THROW(estimate_prob_three({5, 5, 0, 0, 1, 1, 10, 1, 0}), DomainError);
}

TEST(SweepDelta, CrossesCuspOrdinate) {
  const SimConfig base{1000, 1000, 0.0, 0.0, 1.0, 1.0, 10000, 17, 1};
  const std::vector<double> deltas = {1.8, 2.0, 2.2};
  const auto rows = sweep_delta(base, deltas);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_LT(rows[0].result.p_hat, rows[1].result.p_hat);
  EXPECT_LT(rows[1].result.p_hat, rows[2].result.p_hat);
  EXPECT_LE(rows[0].result.p_hat, 0.1);
  // The wedge above the cusp closes slowly: p_hat(2.2) is about 0.69 at
  // n = 1000 and only approaches 1 for much larger samples.
  const SimConfig large{20000, 20000, 2.2, 0.0, 1.0, 1.0, 1000, 17, 1};
  EXPECT_GE(estimate_prob_three(large).p_hat, 0.8);
}

TEST(SweepDelta, GridPointsUseDistinctStreams) {
  const SimConfig base{10, 10, 0.0, 0.0, 1.0, 1.0, 2000, 17, 1};
  const std::vector<double> deltas = {3.0, 3.0};
  const auto rows = sweep_delta(base, deltas);
  EXPECT_NE(rows[0].result.count_three, rows[1].result.count_three);
  SimConfig single = base;
  single.mu_x = 3.0;
  EXPECT_TRUE(same(rows[0].result, estimate_prob_three(single, 0)));
  EXPECT_TRUE(same(rows[1].result, estimate_prob_three(single, 1)));
}

TEST(EstimateProbThree, BelowFiniteSampleBoundUnderNull) {
  for (int n : {5, 10, 15}) {
    const SimConfig cfg{n, n, 0.0, 0.0, 0.25, 1.0, 200000, 31, 2};
    EXPECT_LE(estimate_prob_three(cfg).p_hat, multimodality_bound(n, n, 0.5).bound) << n;
  }
}

}  // namespace
}  // namespace bfmle
