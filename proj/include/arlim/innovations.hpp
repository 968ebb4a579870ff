#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "arlim/rng.hpp"

namespace arlim {

/// Whether the innovation variance is finite (l(x) -> sigma^2) or l(x) is
/// slowly varying and unbounded.
class VarianceClass {
 public:
  static VarianceClass finite(double sigma2);
  static VarianceClass infinite_slowly_varying() { return VarianceClass(false, 0.0); }

  bool is_finite() const { return finite_; }
  /// Limit of l(x); only meaningful when is_finite().
  double sigma2() const { return sigma2_; }

 private:
  VarianceClass(bool finite, double sigma2) : finite_(finite), sigma2_(sigma2) {}
  bool finite_;
  double sigma2_;
};

struct GaussianKind {
  double sigma;
};
struct UniformKind {
  double sigma;  // half-width sigma * sqrt(3)
};
struct RademacherKind {};
/// Symmetric, density |x|^-3 on |x| >= 1; P(|e| > t) = t^-2.
struct ParetoTail2Kind {};
struct CustomKind {
  std::function<double(double)> truncated_second_moment;
  std::function<double(Stream&)> sampler;
  VarianceClass variance;
  std::string name;
};

/// A mean-zero iid innovation law with an analytic truncated second moment
/// l(x) = E[e^2 1{|e| <= x}].
class InnovationModel {
 public:
  using Kind = std::variant<GaussianKind, UniformKind, RademacherKind, ParetoTail2Kind, CustomKind>;

  static InnovationModel gaussian(double sigma = 1.0);
  static InnovationModel uniform(double sigma = 1.0);
  static InnovationModel rademacher();
  static InnovationModel pareto2();
  /// Custom models declare their variance class; it is never inferred.
  static InnovationModel custom(std::function<double(double)> l, std::function<double(Stream&)> sampler,
                                VarianceClass variance, std::string name = "custom");
  /// e_t == 0. Used for null-dynamics fixtures.
  static InnovationModel zero();

  const Kind& kind() const { return kind_; }
  const VarianceClass& variance_class() const { return variance_; }
  /// Config id: "gaussian", "uniform", "rademacher", "pareto2", or the custom name.
  std::string id() const;

  /// l(x); x must be nonnegative.
  double l(double x) const;
  double draw(Stream& stream) const;
  /// b_0 = inf{x >= 1 : l(x) > 0}.
  double b0() const;

 private:
  InnovationModel(Kind kind, VarianceClass variance);
  Kind kind_;
  VarianceClass variance_;
};

double eval_l(const InnovationModel& model, double x);

std::vector<double> sample_innovations(const InnovationModel& model, std::size_t n, std::uint64_t seed);
void sample_innovations(const InnovationModel& model, Stream& stream, std::span<double> out);

struct BnSearchOptions {
  double relative_tolerance = 1e-12;
  double upper_bound = 1e150;
};

/// b_n = inf{s >= b_0 + 1 : l(s)/s^2 <= 1/n}; n == 0 returns b_0.
double compute_bn(const InnovationModel& model, std::size_t n, const BnSearchOptions& options = {});

/// l(b_n), the variance proxy used by every normalization.
double l_at_bn(const InnovationModel& model, std::size_t n);

/// Cached b_n values for one model.
class BnSequence {
 public:
  explicit BnSequence(InnovationModel model);

  double b0() const { return b0_; }
  double operator[](std::size_t n);
  const std::map<std::size_t, double>& values() const { return values_; }

 private:
  InnovationModel model_;
  double b0_;
  std::map<std::size_t, double> values_;
};

}  // namespace arlim
