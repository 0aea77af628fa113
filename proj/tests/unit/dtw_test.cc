#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "behaviocog/biometric/dtw.hpp"
#include "behaviocog/errors.hpp"
#include "behaviocog/rng.hpp"

namespace behaviocog {
namespace {

std::vector<double> wave(int n, double phase = 0.0) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = std::sin(0.15 * i + phase) + 0.3 * std::cos(0.41 * i);
  return v;
}

// Unbanded reference DTW.
double full_dtw(const std::vector<double>& a, const std::vector<double>& b) {
  const std::size_t n = a.size(), m = b.size();
  std::vector<std::vector<double>> c(n + 1, std::vector<double>(m + 1, INFINITY));
  c[0][0] = 0.0;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= m; ++j) {
      const double d = (a[i - 1] - b[j - 1]) * (a[i - 1] - b[j - 1]);
      c[i][j] = d + std::min({c[i - 1][j], c[i][j - 1], c[i - 1][j - 1]});
    }
  return c[n][m];
}

TEST(DtwTest, IdentityAndSymmetry) {
  const auto a = wave(60), b = wave(45, 0.7);
  EXPECT_EQ(dtw_distance(a, a), 0.0);
  EXPECT_DOUBLE_EQ(dtw_distance(a, b), dtw_distance(b, a));
  EXPECT_GE(dtw_distance(a, b), 0.0);
}

TEST(DtwTest, ZeroBandIsEuclidean) {
  const auto a = wave(40), b = wave(40, 1.3);
  double direct = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) direct += (a[i] - b[i]) * (a[i] - b[i]);
  const auto r = dtw(a, b, 0.0);
  EXPECT_NEAR(r.distance, direct, 1e-9);
  EXPECT_EQ(r.effective_radius, 0.0);
}

TEST(DtwTest, HandComputed) {
  EXPECT_DOUBLE_EQ(dtw_distance(std::vector<double>{0, 0, 0}, std::vector<double>{1, 2, 3}, 0), 14.0);
  EXPECT_DOUBLE_EQ(dtw_distance(std::vector<double>{1, 2, 3}, std::vector<double>{1, 1, 2, 2, 3, 3}), 0.0);
  EXPECT_DOUBLE_EQ(dtw_distance(std::vector<double>{2}, std::vector<double>{1, 3}), 2.0);
}

TEST(DtwTest, WideningNeverIncreases) {
  const auto a = wave(80), b = wave(64, 0.9);
  double prev = INFINITY;
  for (double r : {0.0, 1.0, 2.0, 5.0, 10.0, 20.0, 40.0, 100.0}) {
    const double d = dtw_distance(a, b, r);
    EXPECT_LE(d, prev + 1e-12) << "radius " << r;
    prev = d;
  }
  EXPECT_NEAR(prev, full_dtw(a, b), 1e-9);
}

TEST(DtwTest, NarrowBandIsWidened) {
  const std::vector<double> a{0, 1, 2, 3, 4, 5, 6};
  const std::vector<double> b{0, 3, 6, 2};
  const auto r = dtw(a, b, 0.0);
  EXPECT_GT(r.effective_radius, 0.0);
  EXPECT_TRUE(std::isfinite(r.distance));
  // The widened radius is the smallest that reaches the corner; the same
  // radius requested directly gives the same answer.
  EXPECT_EQ(dtw(a, b, r.effective_radius).distance, r.distance);
}

TEST(DtwTest, UpsampledCopyIsClose) {
  const auto q = wave(100);
  std::vector<double> up;
  for (std::size_t i = 0; i + 1 < q.size(); ++i) {
    up.push_back(q[i]);
    up.push_back(0.5 * (q[i] + q[i + 1]));
  }
  up.push_back(q.back());
  auto shuffled = q;
  std::mt19937_64 g(3);
  std::shuffle(shuffled.begin(), shuffled.end(), g);
  EXPECT_LE(dtw_distance(q, up), 0.01 * dtw_distance(q, shuffled));
}

TEST(DtwTest, BandedMatchesFullWhenWide) {
  Rng rng(17);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 5 + static_cast<int>(rng.below(30)), m = 5 + static_cast<int>(rng.below(30));
    std::vector<double> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(m));
    for (auto& v : a) v = rng.normal();
    for (auto& v : b) v = rng.normal();
    EXPECT_NEAR(dtw_distance(a, b, 1000), full_dtw(a, b), 1e-9);
  }
}

TEST(DtwTest, RejectsBadInput) {
  EXPECT_THROW(dtw(std::vector<double>{}, std::vector<double>{1}), ConfigError);
  EXPECT_THROW(dtw(std::vector<double>{1}, std::vector<double>{1}, -1), ConfigError);
}

}  // namespace
}  // namespace behaviocog
