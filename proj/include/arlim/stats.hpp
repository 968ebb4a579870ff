#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace arlim {

inline constexpr std::array<double, 5> kReportProbabilities{0.05, 0.25, 0.5, 0.75, 0.95};

struct Summary {
  double mean = 0;
  double variance = 0;  // 1/(N-1) normalization; 0 when N == 1
  std::array<double, 5> quantiles{};  // at kReportProbabilities
  std::size_t count = 0;
};

Summary summarize(std::span<const double> sample);

/// Linear interpolation between order statistics, h = (N-1)p.
double quantile_sorted(std::span<const double> sorted, double p);

/// sup_x |F_a(x) − F_b(x)| over the pooled sample points.
double ks_two_sample(std::span<const double> a, std::span<const double> b);

/// sup_x |F_a(x) − F(x)| against a continuous reference CDF.
double ks_one_sample(std::span<const double> a, const std::function<double(double)>& cdf);

/// CDF of N(0, variance).
double normal_cdf(double x, double variance = 1.0);

double pearson(std::span<const double> a, std::span<const double> b);

double rmse(std::span<const double> errors);
/// RMSE over the central (1 − 2·trim) fraction of the sorted errors.
double trimmed_rmse(std::span<const double> errors, double trim = 0.01);

struct SlopeFit {
  double slope = 0;
  double intercept = 0;
  double stderr_slope = 0;
};

/// OLS fit of log(rmse) on log(n).
SlopeFit rate_slope(std::span<const double> n_list, std::span<const double> rmse_list);

}  // namespace arlim
