#include <cmath>

#include <gtest/gtest.h>

#include "bfmle/bound.hpp"
#include "bfmle/geometry.hpp"

namespace bfmle {
namespace {

TEST(MultimodalityBound, EqualSizesHalfSdRatio) {
  const BoundResult b5 = multimodality_bound(5, 5, 0.5);
  EXPECT_DOUBLE_EQ(b5.c_n, 2.0);
  EXPECT_NEAR(b5.t_threshold, 36.0 / (9.0 * std::sqrt(1.25)), 1e-14);
  EXPECT_NEAR(b5.bound, 0.023, 5e-4);
  EXPECT_NEAR(multimodality_bound(10, 10, 0.5).bound, 0.00045, 5e-6);
  EXPECT_NEAR(multimodality_bound(15, 15, 0.5).bound, 0.00001, 5e-6);
}

TEST(MultimodalityBound, CnIsCuspOrdinate) {
  for (int n : {2, 3, 7, 20, 40}) {
    for (int m : {2, 5, 11, 30}) {
      const BoundResult b = multimodality_bound(n, m, 1.3);
      const double r = static_cast<double>(n) / m;
      EXPECT_NEAR(b.c_n, cusps(r).delta_c, 1e-12 * b.c_n);
      const double via_cn = std::sqrt(m - 1.0) * b.c_n * std::sqrt(r / (1.3 * 1.3 + r));
      EXPECT_NEAR(b.t_threshold, via_cn, 1e-12 * via_cn);
    }
  }
}

TEST(MultimodalityBound, NonIncreasingInM) {
  for (double r : {0.5, 1.0, 3.0}) {
    for (double gamma : {0.25, 0.5, 1.0, 3.0}) {
      double prev = 1.0;
      for (int m = 2; m <= 200; ++m) {
        const double b = multimodality_bound_from_ratio(r, m, gamma).bound;
        EXPECT_LE(b, prev) << r << ' ' << gamma << ' ' << m;
        EXPECT_GE(b, 0.0);
        prev = b;
      }
    }
  }
}

TEST(MultimodalityBound, RatioEntryMatchesSizes) {
  const BoundResult a = multimodality_bound(20, 5, 0.7);
  const BoundResult b = multimodality_bound_from_ratio(4.0, 5, 0.7);
  EXPECT_DOUBLE_EQ(a.bound, b.bound);
  EXPECT_DOUBLE_EQ(a.t_threshold, b.t_threshold);
}

TEST(MultimodalityBound, DomainErrors) {
  EXPECT_THROW(multimodality_bound(1, 5, 1.0), DomainError);
  EXPECT_THROW(multimodality_bound(5, 1, 1.0), DomainError);
  EXPECT_THROW(multimodality_bound(5, 5, 0.0), DomainError);
  EXPECT_THROW(multimodality_bound_from_ratio(-1.0, 5, 1.0), DomainError);
}

}  // namespace
}  // namespace bfmle
