#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "arlim/errors.hpp"
#include "arlim/innovations.hpp"

namespace arlim {
namespace {

// Composite Simpson rule for ∫_{-x}^{x} t² φ(t/σ)/σ dt.
double gaussian_l_oracle(double sigma, double x) {
  const int m = 20000;
  const double h = 2 * x / m;
  auto f = [sigma](double t) {
    return t * t * std::exp(-0.5 * t * t / (sigma * sigma)) / (sigma * std::sqrt(2 * M_PI));
  };
  double s = f(-x) + f(x);
  for (int k = 1; k < m; ++k) s += (k % 2 ? 4 : 2) * f(-x + k * h);
  return s * h / 3;
}

std::vector<InnovationModel> builtins() {
  return {InnovationModel::gaussian(1.0), InnovationModel::gaussian(2.5), InnovationModel::uniform(1.0),
          InnovationModel::uniform(0.3), InnovationModel::rademacher(), InnovationModel::pareto2()};
}

TEST(EvalL, Rademacher) {
  const auto m = InnovationModel::rademacher();
  EXPECT_EQ(eval_l(m, 0.5), 0.0);
  EXPECT_EQ(eval_l(m, 1.0), 1.0);
  EXPECT_EQ(eval_l(m, 50.0), 1.0);
}

TEST(EvalL, ParetoLogIdentity) {
  const auto m = InnovationModel::pareto2();
  EXPECT_EQ(eval_l(m, 0.7), 0.0);
  for (int k = 0; k <= 30; ++k) EXPECT_NEAR(eval_l(m, std::exp(double(k))), 2.0 * k, 1e-12 * (1 + k));
  EXPECT_DOUBLE_EQ(eval_l(m, 10.0), 2 * std::log(10.0));
}

TEST(EvalL, GaussianMatchesQuadrature) {
  EXPECT_NEAR(eval_l(InnovationModel::gaussian(1.0), 8.0), 1.0, 1e-6);
  // mpmath quad, 40 digits.
  EXPECT_NEAR(eval_l(InnovationModel::gaussian(1.0), 1.0), 0.19874804309879920, 1e-15);
  for (double sigma : {0.5, 1.0, 3.0})
    for (double x : {0.1, 0.8, 2.0, 5.0})
      EXPECT_NEAR(eval_l(InnovationModel::gaussian(sigma), x), gaussian_l_oracle(sigma, x), 1e-10 * sigma * sigma);
}

TEST(EvalL, UniformClosedForm) {
  const auto m = InnovationModel::uniform(1.0);
  EXPECT_NEAR(eval_l(m, 1.0), 1.0 / (3 * std::sqrt(3.0)), 1e-15);
  EXPECT_EQ(eval_l(m, 2.0), 1.0);
}

TEST(EvalL, RejectsNegative) { EXPECT_THROW(eval_l(InnovationModel::gaussian(), -1.0), DomainError); }

TEST(EvalL, MonotoneAndBoundedBySigma2) {
  for (const auto& m : builtins()) {
    double prev = 0;
    for (double x = 0; x < 200; x += 0.37) {
      const double v = eval_l(m, x);
      ASSERT_GE(v, prev) << m.id() << " x=" << x;
      if (m.variance_class().is_finite()) ASSERT_LE(v, m.variance_class().sigma2() * (1 + 1e-15));
      prev = v;
    }
  }
}

TEST(SampleInnovations, RademacherSupport) {
  for (double v : sample_innovations(InnovationModel::rademacher(), 4, 11)) EXPECT_TRUE(v == 1.0 || v == -1.0);
}

TEST(SampleInnovations, ParetoSupport) {
  for (double v : sample_innovations(InnovationModel::pareto2(), 100000, 12)) ASSERT_GE(std::abs(v), 1.0);
}

TEST(SampleInnovations, ParetoTail) {
  const auto e = sample_innovations(InnovationModel::pareto2(), 200000, 13);
  const double frac = std::count_if(e.begin(), e.end(), [](double v) { return std::abs(v) > 3.0; }) / 200000.0;
  EXPECT_NEAR(frac, 1.0 / 9, 5 * std::sqrt(1.0 / 9 * 8 / 9 / 200000));
}

TEST(SampleInnovations, GaussianMoments) {
  const auto e = sample_innovations(InnovationModel::gaussian(1.0), 1000000, 14);
  const double mean = std::accumulate(e.begin(), e.end(), 0.0) / e.size();
  double ss = 0;
  for (double v : e) ss += (v - mean) * (v - mean);
  EXPECT_NEAR(mean, 0.0, 5e-3);
  const double var = ss / (e.size() - 1);
  EXPECT_GE(var, 0.99);
  EXPECT_LE(var, 1.01);
}

TEST(SampleInnovations, FiniteKindsMeanZero) {
  for (const auto& m : {InnovationModel::uniform(2.0), InnovationModel::rademacher()}) {
    const auto e = sample_innovations(m, 1000000, 15);
    const double mean = std::accumulate(e.begin(), e.end(), 0.0) / e.size();
    EXPECT_LT(std::abs(mean), 5 * std::sqrt(m.variance_class().sigma2() / 1e6)) << m.id();
  }
}

TEST(SampleInnovations, Deterministic) {
  EXPECT_EQ(sample_innovations(InnovationModel::pareto2(), 50, 99), sample_innovations(InnovationModel::pareto2(), 50, 99));
  EXPECT_NE(sample_innovations(InnovationModel::pareto2(), 50, 99), sample_innovations(InnovationModel::pareto2(), 50, 98));
}

TEST(ComputeBn, RademacherClosedForm) {
  const auto m = InnovationModel::rademacher();
  EXPECT_EQ(compute_bn(m, 100), 10.0);
  EXPECT_EQ(compute_bn(m, 1), 2.0);
  EXPECT_EQ(compute_bn(m, 4), 2.0);
  EXPECT_EQ(compute_bn(m, 0), 1.0);
}

TEST(ComputeBn, ParetoBisectionOracle) {
  // Root of 2 ln s = s²/100 above 1, from mpmath findroot.
  EXPECT_NEAR(compute_bn(InnovationModel::pareto2(), 100), 25.441649169018121, 1e-6);
}

TEST(ComputeBn, Invariants) {
  for (const auto& m : builtins()) {
    double prev = 0;
    for (std::size_t n = 1; n <= 10000; n += (n < 200 ? 1 : 37)) {
      const double b = compute_bn(m, n);
      ASSERT_GE(b, m.b0() + 1) << m.id();
      ASSERT_LE(n * eval_l(m, b), b * b) << m.id() << " n=" << n;
      ASSERT_GE(b, prev) << m.id() << " n=" << n;
      prev = b;
    }
  }
}

TEST(ComputeBn, CustomWithoutMassFailsBracket) {
  auto dead = InnovationModel::custom([](double) { return 0.0; }, [](Stream&) { return 0.0; },
                                      VarianceClass::finite(1.0), "dead");
  EXPECT_THROW(compute_bn(dead, 10), BracketError);
}

TEST(ComputeBn, CustomDelegates) {
  // l(x) = 4 above 1: b_n = max(2, 2√n).
  auto m = InnovationModel::custom([](double x) { return x >= 1 ? 4.0 : 0.0; },
                                   [](Stream& s) { return s.uniform() < 0.5 ? -2.0 : 2.0; },
                                   VarianceClass::finite(4.0), "twos");
  EXPECT_NEAR(compute_bn(m, 100), 20.0, 1e-9);
  EXPECT_NEAR(compute_bn(m, 1), 2.0, 1e-9);
}

TEST(BnSequence, CachesValues) {
  BnSequence seq(InnovationModel::pareto2());
  EXPECT_EQ(seq.b0(), 1.0);
  EXPECT_EQ(seq[100], compute_bn(InnovationModel::pareto2(), 100));
  EXPECT_EQ(seq.values().size(), 2u);  // b_0 and b_100
}

TEST(InnovationModel, Ids) {
  EXPECT_EQ(InnovationModel::gaussian().id(), "gaussian");
  EXPECT_EQ(InnovationModel::uniform().id(), "uniform");
  EXPECT_EQ(InnovationModel::rademacher().id(), "rademacher");
  EXPECT_EQ(InnovationModel::pareto2().id(), "pareto2");
  EXPECT_FALSE(InnovationModel::pareto2().variance_class().is_finite());
  EXPECT_THROW(InnovationModel::gaussian(0.0), DomainError);
}

}  // namespace
}  // namespace arlim
