#include "arlim/stats.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "arlim/errors.hpp"

namespace arlim {

namespace {

void require_nonempty(std::span<const double> sample, const char* what) {
  if (sample.empty()) throw DomainError(std::string(what) + ": empty sample");
}

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double value) {
    const double t = sum_ + value;
    if (std::fabs(sum_) >= std::fabs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

double mean_of(std::span<const double> sample) {
  CompensatedSum sum;
  for (double x : sample) sum.add(x);
  return sum.value() / static_cast<double>(sample.size());
}

}  // namespace

double quantile_sorted(std::span<const double> sorted, double p) {
  require_nonempty(sorted, "quantile");
  const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

Summary summarize(std::span<const double> sample) {
  require_nonempty(sample, "summarize");
  Summary out;
  out.count = sample.size();
  out.mean = mean_of(sample);
  if (sample.size() > 1) {
    CompensatedSum squares;
    for (double x : sample) squares.add((x - out.mean) * (x - out.mean));
    out.variance = squares.value() / static_cast<double>(sample.size() - 1);
  }
  std::vector<double> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < kReportProbabilities.size(); ++i) {
    out.quantiles[i] = quantile_sorted(sorted, kReportProbabilities[i]);
  }
  return out;
}

double ks_two_sample(std::span<const double> a, std::span<const double> b) {
  require_nonempty(a, "ks_two_sample");
  require_nonempty(b, "ks_two_sample");
  std::vector<double> x(a.begin(), a.end());
  std::vector<double> y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const double nx = static_cast<double>(x.size());
  const double ny = static_cast<double>(y.size());
  std::size_t i = 0, j = 0;
  double worst = 0.0;
  while (i < x.size() && j < y.size()) {
    // Step past every copy of the smallest pending value in both samples
    // before comparing, so ties are evaluated on the right-continuous ECDFs.
    const double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] == v) ++i;
    while (j < y.size() && y[j] == v) ++j;
    worst = std::max(worst, std::fabs(static_cast<double>(i) / nx - static_cast<double>(j) / ny));
  }
  return worst;
}

double ks_one_sample(std::span<const double> a, const std::function<double(double)>& cdf) {
  require_nonempty(a, "ks_one_sample");
  std::vector<double> x(a.begin(), a.end());
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double f = cdf(x[i]);
    worst = std::max({worst, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return worst;
}

double normal_cdf(double x, double variance) { return 0.5 * std::erfc(-x / std::sqrt(2.0 * variance)); }

double pearson(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.size() < 2) throw DomainError("pearson: need two equal-length samples of size >= 2");
  const double ma = mean_of(a);
  const double mb = mean_of(b);
  CompensatedSum sab, saa, sbb;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - ma;
    const double db = b[i] - mb;
    sab.add(da * db);
    saa.add(da * da);
    sbb.add(db * db);
  }
  return sab.value() / std::sqrt(saa.value() * sbb.value());
}

double rmse(std::span<const double> errors) {
  require_nonempty(errors, "rmse");
  CompensatedSum squares;
  for (double e : errors) squares.add(e * e);
  return std::sqrt(squares.value() / static_cast<double>(errors.size()));
}

double trimmed_rmse(std::span<const double> errors, double trim) {
  require_nonempty(errors, "trimmed_rmse");
  std::vector<double> sorted(errors.begin(), errors.end());
  std::sort(sorted.begin(), sorted.end());
  const auto drop = static_cast<std::size_t>(std::floor(trim * static_cast<double>(sorted.size())));
  if (2 * drop >= sorted.size()) throw DomainError("trimmed_rmse: trim removes every point");
  return rmse(std::span<const double>(sorted).subspan(drop, sorted.size() - 2 * drop));
}

SlopeFit rate_slope(std::span<const double> n_list, std::span<const double> rmse_list) {
  if (n_list.size() != rmse_list.size()) throw DomainError("rate_slope: size mismatch");
  if (n_list.size() < 3) throw DomainError("rate_slope: need at least 3 points");
  const std::size_t k = n_list.size();
  std::vector<double> lx(k), ly(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (!(n_list[i] > 0.0)) throw DomainError("rate_slope: sample sizes must be positive");
    if (!(rmse_list[i] > 0.0)) throw DomainError("rate_slope: rmse values must be positive");
    lx[i] = std::log(n_list[i]);
    ly[i] = std::log(rmse_list[i]);
  }
  const double mx = mean_of(lx);
  const double my = mean_of(ly);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (!(sxx > 0.0)) throw DomainError("rate_slope: sample sizes must not all be equal");
  SlopeFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double rss = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const double r = ly[i] - fit.intercept - fit.slope * lx[i];
    rss += r * r;
  }
  fit.stderr_slope = std::sqrt(std::max(rss, 0.0) / static_cast<double>(k - 2) / sxx);
  return fit;
}

}  // namespace arlim
