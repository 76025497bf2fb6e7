#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "bfmle/stats.hpp"

namespace bfmle {
namespace {

TEST(Summarize, DivisorNConvention) {
  const std::vector<double> xs = {0, 2};
  const std::vector<double> ys = {1, 1, 4};
  const SummaryStats s = summarize(xs, ys);
  EXPECT_EQ(s.n, 2);
  EXPECT_EQ(s.m, 3);
  EXPECT_DOUBLE_EQ(s.mean_x, 1.0);
  EXPECT_DOUBLE_EQ(s.var_x, 1.0);
  EXPECT_DOUBLE_EQ(s.mean_y, 2.0);
  EXPECT_DOUBLE_EQ(s.var_y, 2.0);
}

TEST(Summarize, RejectsShortAndConstantSamples) {
  const std::vector<double> one = {1.0};
  const std::vector<double> ok = {1.0, 2.0};
  const std::vector<double> constant = {0.1, 0.1, 0.1, 0.1};
  EXPECT_THROW(summarize(one, ok), LengthError);
  EXPECT_THROW(summarize(ok, one), LengthError);
  EXPECT_THROW(summarize(constant, ok), DegenerateVariance);
  EXPECT_THROW(summarize(ok, constant), DegenerateVariance);
}

TEST(Summarize, LawOfLargeNumbersBand) {
  std::mt19937_64 gen(2024);
  std::normal_distribution<double> z;
  std::vector<double> xs(1000), ys(1000);
  for (auto& x : xs) x = z(gen);
  for (auto& y : ys) y = z(gen);
  const SummaryStats s = summarize(xs, ys);
  EXPECT_GT(s.mean_x, -0.2);
  EXPECT_LT(s.mean_x, 0.2);
  EXPECT_GT(s.var_x, 0.8);
  EXPECT_LT(s.var_x, 1.2);
}

TEST(Summarize, AccurateOnOffsetData) {
  // Variance of {1e8 + k} for k = 0..9 is 8.25 under divisor n.
  std::vector<double> xs;
  for (int k = 0; k < 10; ++k) xs.push_back(1e8 + k);
  const SummaryStats s = summarize(xs, xs);
  EXPECT_NEAR(s.var_x, 8.25, 8.25 * 1e-12);
  EXPECT_NEAR(s.mean_x, 1e8 + 4.5, 1e-6);
}

TEST(Reduce, Examples) {
  const ReducedStats sym = reduce({7, 7, 3.0, 3.0, 2.0, 2.0});
  EXPECT_DOUBLE_EQ(sym.r, 1.0);
  EXPECT_DOUBLE_EQ(sym.gamma_hat, 1.0);
  EXPECT_DOUBLE_EQ(sym.delta_hat, 0.0);

  const ReducedStats cusp = reduce({20, 5, 0.0, 0.0, 13.5 * 0.3, 0.3});
  EXPECT_DOUBLE_EQ(cusp.r, 4.0);
  EXPECT_NEAR(cusp.gamma_hat, std::sqrt(27.0 / 2.0), 1e-14);

  const ReducedStats small = reduce({2, 3, 1.0, 2.0, 1.0, 2.0});
  EXPECT_NEAR(small.r, 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(small.gamma_hat, 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(small.delta_hat, -1.0 / std::sqrt(2.0), 1e-15);
}

TEST(Reduce, RejectsInvalidStats) {
  EXPECT_THROW(reduce({1, 5, 0, 0, 1, 1}), LengthError);
  EXPECT_THROW(reduce({5, 5, 0, 0, 0.0, 1}), DegenerateVariance);
  EXPECT_THROW(reduce({5, 5, 0, 0, 1, -1}), DegenerateVariance);
}

TEST(Stats, ShiftAndScaleEquivariance) {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::uniform_int_distribution<int> size(2, 30);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> xs(size(gen)), ys(size(gen));
    for (auto& x : xs) x = u(gen);
    for (auto& y : ys) y = u(gen);
    const double c = u(gen) * 3.0;
    const double k = std::exp(u(gen));
    std::vector<double> xs_shift = xs, ys_shift = ys, xs_scale = xs, ys_scale = ys;
    for (auto& x : xs_shift) x += c;
    for (auto& y : ys_shift) y += c;
    for (auto& x : xs_scale) x *= k;
    for (auto& y : ys_scale) y *= k;

    const SummaryStats s = summarize(xs, ys);
    const SummaryStats sh = summarize(xs_shift, ys_shift);
    const SummaryStats sc = summarize(xs_scale, ys_scale);
    const ReducedStats r = reduce(s);

    EXPECT_NEAR(sh.mean_x, s.mean_x + c, 1e-12);
    EXPECT_NEAR(sh.var_x, s.var_x, 1e-11 * s.var_x + 1e-13);
    EXPECT_NEAR(sh.var_y, s.var_y, 1e-11 * s.var_y + 1e-13);
    EXPECT_NEAR(reduce(sh).delta_hat, r.delta_hat, 1e-10 * (1 + std::abs(r.delta_hat)));

    EXPECT_NEAR(sc.mean_y, k * s.mean_y, 1e-12 * k);
    EXPECT_NEAR(sc.var_x, k * k * s.var_x, 1e-12 * k * k * s.var_x);
    EXPECT_NEAR(reduce(sc).gamma_hat, r.gamma_hat, 1e-12 * r.gamma_hat);
    EXPECT_NEAR(reduce(sc).delta_hat, r.delta_hat, 1e-12 * (1 + std::abs(r.delta_hat)));
  }
}

TEST(Stats, UnbiasedConversion) {
  EXPECT_DOUBLE_EQ(unbiased_to_mle_variance(2.0, 4), 1.5);
  EXPECT_THROW(unbiased_to_mle_variance(2.0, 1), LengthError);
}

}  // namespace
}  // namespace bfmle
