#include <gtest/gtest.h>

#include <cmath>

#include "arlim/errors.hpp"
#include "arlim/rng.hpp"
#include "arlim/stats.hpp"

namespace arlim {
namespace {

TEST(KsTwoSample, Examples) {
  const std::vector<double> a{3, 1, 4, 1, 5};
  EXPECT_EQ(ks_two_sample(a, a), 0.0);
  EXPECT_EQ(ks_two_sample(std::vector<double>{0}, std::vector<double>{1}), 1.0);
  EXPECT_DOUBLE_EQ(ks_two_sample(std::vector<double>{1, 2}, std::vector<double>{1.5, 3}), 0.5);
  EXPECT_THROW(ks_two_sample(std::vector<double>{}, a), DomainError);
}

TEST(KsTwoSample, TiesAcrossSamples) {
  // ECDFs agree everywhere except on [1, 2).
  EXPECT_DOUBLE_EQ(ks_two_sample(std::vector<double>{1, 2, 2}, std::vector<double>{2, 2, 2}), 1.0 / 3);
}

TEST(KsTwoSample, BruteForceOracle) {
  Stream s(9);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<double> a(30 + rep), b(17 + 2 * rep);
    for (double& v : a) v = std::round(4 * s.normal()) / 4;
    for (double& v : b) v = std::round(4 * s.normal() + 1) / 4;
    double worst = 0;
    for (const auto* pool : {&a, &b})
      for (double x : *pool) {
        const double fa = std::count_if(a.begin(), a.end(), [x](double v) { return v <= x; }) / double(a.size());
        const double fb = std::count_if(b.begin(), b.end(), [x](double v) { return v <= x; }) / double(b.size());
        worst = std::max(worst, std::abs(fa - fb));
      }
    EXPECT_DOUBLE_EQ(ks_two_sample(a, b), worst);
  }
}

TEST(KsOneSample, NormalDraws) {
  Stream s(10);
  std::vector<double> v(100000);
  for (double& x : v) x = s.normal();
  EXPECT_LT(ks_one_sample(v, [](double x) { return normal_cdf(x); }), 0.01);
  EXPECT_GT(ks_one_sample(v, [](double x) { return normal_cdf(x, 2.0); }), 0.05);
  EXPECT_DOUBLE_EQ(ks_one_sample(std::vector<double>{0.0}, [](double x) { return normal_cdf(x); }), 0.5);
}

TEST(Summarize, Examples) {
  const Summary a = summarize(std::vector<double>{1, 1, 1});
  EXPECT_EQ(a.mean, 1);
  EXPECT_EQ(a.variance, 0);
  EXPECT_EQ(a.count, 3u);
  const Summary b = summarize(std::vector<double>{4, 1, 3, 2});
  EXPECT_DOUBLE_EQ(b.quantiles[2], 2.5);
  EXPECT_DOUBLE_EQ(b.variance, 5.0 / 3);
  EXPECT_DOUBLE_EQ(b.quantiles[0], 1.15);
  EXPECT_THROW(summarize(std::vector<double>{}), DomainError);
  EXPECT_EQ(summarize(std::vector<double>{7}).variance, 0);
}

TEST(Summarize, NormalQuantile) {
  Stream s(11);
  std::vector<double> v(1000000);
  for (double& x : v) x = s.normal();
  const Summary q = summarize(v);
  EXPECT_NEAR(q.quantiles[4], 1.6448536269514722, 0.01);
  for (std::size_t k = 1; k < q.quantiles.size(); ++k) EXPECT_LE(q.quantiles[k - 1], q.quantiles[k]);
}

TEST(RateSlope, ExactPowers) {
  const std::vector<double> n{500, 1000, 2000, 4000, 8000};
  std::vector<double> half, three_halves;
  for (double x : n) {
    half.push_back(std::pow(x, -0.5));
    three_halves.push_back(7 * std::pow(x, -1.5));
  }
  const SlopeFit a = rate_slope(n, half);
  EXPECT_NEAR(a.slope, -0.5, 1e-12);
  EXPECT_NEAR(a.stderr_slope, 0, 1e-10);
  EXPECT_NEAR(rate_slope(n, three_halves).slope, -1.5, 1e-12);
  EXPECT_NEAR(rate_slope(n, three_halves).intercept, std::log(7.0), 1e-10);
}

TEST(RateSlope, NoisyMatchesNormalEquations) {
  const std::vector<double> n{100, 300, 700, 1500, 4000, 9000};
  const std::vector<double> r{0.11, 0.052, 0.041, 0.023, 0.0161, 0.0098};
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = n.size();
  for (std::size_t i = 0; i < n.size(); ++i) {
    const double x = std::log(n[i]), y = std::log(r[i]);
    sx += x, sy += y, sxx += x * x, sxy += x * y;
  }
  const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / k;
  double sse = 0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const double e = std::log(r[i]) - intercept - slope * std::log(n[i]);
    sse += e * e;
  }
  const double se = std::sqrt(sse / (k - 2) / (sxx - sx * sx / k));
  const SlopeFit f = rate_slope(n, r);
  EXPECT_NEAR(f.slope, slope, 1e-12);
  EXPECT_NEAR(f.intercept, intercept, 1e-12);
  EXPECT_NEAR(f.stderr_slope, se, 1e-12);
}

TEST(RateSlope, Rejects) {
  EXPECT_THROW(rate_slope(std::vector<double>{1, 2}, std::vector<double>{1, 2}), DomainError);
  EXPECT_THROW(rate_slope(std::vector<double>{1, 2, 3}, std::vector<double>{1, 0, 2}), DomainError);
}

TEST(Rmse, TrimmedDropsTails) {
  std::vector<double> e(1000, 1.0);
  e[0] = 1e6;
  e[1] = -1e6;
  EXPECT_GT(rmse(e), 1000);
  EXPECT_DOUBLE_EQ(trimmed_rmse(e), 1.0);
}

TEST(Pearson, PerfectAndSign) {
  const std::vector<double> a{1, 2, 3, 4}, b{-2, -4, -6, -8};
  EXPECT_NEAR(pearson(a, b), -1.0, 1e-15);
}

}  // namespace
}  // namespace arlim
