#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "trsmlab/bounds.hpp"

using namespace trsmlab;

TEST(TwoLarge, Claimed) {
  EXPECT_DOUBLE_EQ(bw_two_large_claimed(8, 8, 4), 64.0);
  EXPECT_EQ(bw_two_large_claimed(123, 45, 1), 0.0);
  EXPECT_DOUBLE_EQ(bw_two_large_claimed(1, 1, 4), 1.0);
}

TEST(TwoLarge, Corrected) {
  EXPECT_DOUBLE_EQ(bw_two_large_corrected(8, 8, 4), 128.0);
  EXPECT_EQ(bw_two_large_corrected(123, 45, 1), 0.0);
  EXPECT_DOUBLE_EQ(bw_two_large_corrected(16, 1, 4), 272.0);
}

TEST(ThreeLarge, Claimed) {
  EXPECT_NEAR(bw_three_large_claimed(4, 32, 4), std::exp2(14.0 / 3.0), 1e-12);
  EXPECT_NEAR(bw_three_large_claimed(4, 32, 4), 25.3984, 1e-4);
  EXPECT_DOUBLE_EQ(bw_three_large_claimed(1, 1, 1), 1.0);
  EXPECT_NEAR(bw_three_large_claimed(8, 8, 8), 16.0, 1e-12);
}

TEST(ThreeLarge, Corrected) {
  EXPECT_NEAR(bw_three_large_corrected(4, 32, 4), std::exp2(20.0 / 3.0), 1e-12);
  EXPECT_NEAR(bw_three_large_corrected(4, 32, 4), 101.5937, 1e-4);
  EXPECT_DOUBLE_EQ(bw_three_large_corrected(1, 1, 1), 1.0);
  EXPECT_NEAR(bw_three_large_corrected(8, 8, 8), 16.0, 1e-12);
}

TEST(GridRows, ProposedSplit) {
  EXPECT_DOUBLE_EQ(grid_rows(4, 16, 16), 2.0);
  EXPECT_DOUBLE_EQ(grid_rows(3, 3 * 64, 64), 1.0);
  EXPECT_DOUBLE_EQ(grid_rows(16, 1, 4), 8.0);
}

TEST(BoundsReport, TwoLargeSquare) {
  BoundsReport r = bounds_report({8, 8, 4});
  EXPECT_DOUBLE_EQ(r.claimed_two, 64);
  EXPECT_DOUBLE_EQ(r.corrected_two, 128);
  EXPECT_DOUBLE_EQ(r.ratio_two, 2);
  EXPECT_TRUE(r.exceeds_two);
}

TEST(BoundsReport, ThreeLargeTall) {
  BoundsReport r = bounds_report({4, 32, 4});
  EXPECT_NEAR(r.ratio_three, 4.0, 1e-12);  // (32/4)^(2/3)
  EXPECT_TRUE(r.exceeds_three);             // 32 > 4 * 2
  EXPECT_FALSE(r.exceeds_two);
}

TEST(BoundsReport, SingleProcessorRatioConvention) {
  BoundsReport r = bounds_report({16, 16, 1});
  EXPECT_EQ(r.claimed_two, 0);
  EXPECT_EQ(r.corrected_two, 0);
  EXPECT_EQ(r.ratio_two, 1);
}

TEST(BoundsReport, ExceedsThreeBoundaryIsStrict) {
  // k == n sqrt(p) exactly: not strictly greater.
  EXPECT_FALSE(bounds_report({4, 16, 16}).exceeds_three);
  EXPECT_TRUE(bounds_report({4, 17, 16}).exceeds_three);
}

TEST(BoundsReport, Identities) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::uint64_t> dim(1, 1'000'000);
  std::uniform_int_distribution<unsigned> logp(1, 20);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t n = dim(rng), k = dim(rng), p = std::uint64_t{1} << logp(rng);
    BoundsReport r = bounds_report({n, k, p});
    const double nd = double(n), kd = double(k);
    EXPECT_LE(std::abs(r.ratio_two - (1 + nd / kd)), 1e-12 * r.ratio_two);
    EXPECT_LE(std::abs(r.ratio_three - std::cbrt((kd / nd) * (kd / nd))), 1e-12 * r.ratio_three);
    EXPECT_LE(std::abs(r.p_r * r.p_r * kd - nd * double(p)), 4 * std::ldexp(1.0, -52) * nd * double(p));
    if (r.exceeds_three) {
      EXPECT_GT(r.ratio_three, std::cbrt(double(p)));
    }
    if (n >= k) {
      EXPECT_GE(r.ratio_two, 2.0);
    }
  }
}

TEST(BoundsReport, HomogeneousOfDegreeTwo) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::uint64_t> dim(1, 4096);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t n = dim(rng), k = dim(rng), p = 64, c = 8;
    BoundsReport a = bounds_report({n, k, p}), b = bounds_report({c * n, c * k, p});
    EXPECT_NEAR(b.claimed_two / a.claimed_two, 64.0, 1e-10);
    EXPECT_NEAR(b.corrected_two / a.corrected_two, 64.0, 1e-10);
    EXPECT_NEAR(b.claimed_three / a.claimed_three, 64.0, 1e-10);
    EXPECT_NEAR(b.corrected_three / a.corrected_three, 64.0, 1e-10);
    EXPECT_NEAR(b.ratio_two, a.ratio_two, 1e-12 * a.ratio_two);
    EXPECT_NEAR(b.ratio_three, a.ratio_three, 1e-12 * a.ratio_three);
  }
}

TEST(BoundsReport, TwoLargeRatioUnbounded) {
  double prev = 0;
  for (std::uint64_t n = 1; n <= (1u << 20); n *= 4) {
    double ratio = bounds_report({n, 1, 16}).ratio_two;
    EXPECT_GT(ratio, prev);
    prev = ratio;
  }
  EXPECT_GT(prev, 1e6);
}
