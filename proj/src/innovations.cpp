#include "arlim/innovations.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "arlim/errors.hpp"

namespace arlim {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

double gaussian_l(double sigma, double x) {
  const double z = x / sigma;
  const double density = std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
  const double value = sigma * sigma * (std::erf(z / std::numbers::sqrt2) - 2.0 * z * density);
  return value > 0.0 ? value : 0.0;
}

double uniform_l(double sigma, double x) {
  const double half_width = sigma * std::numbers::sqrt3;
  if (x >= half_width) return sigma * sigma;
  return x * x * x / (3.0 * half_width);
}

void require_positive(double sigma, const char* what) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw DomainError(std::string(what) + ": sigma must be positive and finite");
  }
}

}  // namespace

VarianceClass VarianceClass::finite(double sigma2) {
  if (!(sigma2 >= 0.0) || !std::isfinite(sigma2)) throw DomainError("finite variance must be nonnegative");
  return VarianceClass(true, sigma2);
}

InnovationModel::InnovationModel(Kind kind, VarianceClass variance)
    : kind_(std::move(kind)), variance_(variance) {}

InnovationModel InnovationModel::gaussian(double sigma) {
  require_positive(sigma, "gaussian");
  return InnovationModel(GaussianKind{sigma}, VarianceClass::finite(sigma * sigma));
}

InnovationModel InnovationModel::uniform(double sigma) {
  require_positive(sigma, "uniform");
  return InnovationModel(UniformKind{sigma}, VarianceClass::finite(sigma * sigma));
}

InnovationModel InnovationModel::rademacher() {
  return InnovationModel(RademacherKind{}, VarianceClass::finite(1.0));
}

InnovationModel InnovationModel::pareto2() {
  return InnovationModel(ParetoTail2Kind{}, VarianceClass::infinite_slowly_varying());
}

InnovationModel InnovationModel::custom(std::function<double(double)> l, std::function<double(Stream&)> sampler,
                                        VarianceClass variance, std::string name) {
  if (!l || !sampler) throw DomainError("custom model needs both an l evaluator and a sampler");
  return InnovationModel(CustomKind{std::move(l), std::move(sampler), variance, std::move(name)}, variance);
}

InnovationModel InnovationModel::zero() {
  return custom([](double) { return 0.0; }, [](Stream&) { return 0.0; }, VarianceClass::finite(0.0), "zero");
}

std::string InnovationModel::id() const {
  return std::visit(Overloaded{
                        [](const GaussianKind&) { return std::string("gaussian"); },
                        [](const UniformKind&) { return std::string("uniform"); },
                        [](const RademacherKind&) { return std::string("rademacher"); },
                        [](const ParetoTail2Kind&) { return std::string("pareto2"); },
                        [](const CustomKind& k) { return k.name; },
                    },
                    kind_);
}

double InnovationModel::l(double x) const {
  if (!(x >= 0.0)) throw DomainError("l(x) requires x >= 0");
  return std::visit(Overloaded{
                        [x](const GaussianKind& k) { return gaussian_l(k.sigma, x); },
                        [x](const UniformKind& k) { return uniform_l(k.sigma, x); },
                        [x](const RademacherKind&) { return x >= 1.0 ? 1.0 : 0.0; },
                        [x](const ParetoTail2Kind&) { return x > 1.0 ? 2.0 * std::log(x) : 0.0; },
                        [x](const CustomKind& k) { return k.truncated_second_moment(x); },
                    },
                    kind_);
}

double InnovationModel::draw(Stream& stream) const {
  return std::visit(Overloaded{
                        [&](const GaussianKind& k) { return k.sigma * stream.normal(); },
                        [&](const UniformKind& k) {
                          return k.sigma * std::numbers::sqrt3 * (2.0 * stream.uniform() - 1.0);
                        },
                        [&](const RademacherKind&) { return (stream() >> 63) ? 1.0 : -1.0; },
                        [&](const ParetoTail2Kind&) {
                          // |e| = U^{-1/2} has P(|e| > t) = t^{-2}; sign from an independent word.
                          const double magnitude = 1.0 / std::sqrt(stream.uniform());
                          return (stream() >> 63) ? magnitude : -magnitude;
                        },
                        [&](const CustomKind& k) { return k.sampler(stream); },
                    },
                    kind_);
}

double InnovationModel::b0() const {
  if (!std::holds_alternative<CustomKind>(kind_)) return 1.0;
  if (l(1.0) > 0.0) return 1.0;
  // l is nondecreasing: bracket the first x with l(x) > 0, then bisect.
  double lo = 1.0;
  double hi = 2.0;
  while (!(l(hi) > 0.0)) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e150) throw BracketError("l(x) is identically zero on [1, 1e150]; model violates C3");
  }
  while (hi - lo > 1e-12 * hi) {
    const double mid = 0.5 * (lo + hi);
    (l(mid) > 0.0 ? hi : lo) = mid;
  }
  return hi;
}

double eval_l(const InnovationModel& model, double x) { return model.l(x); }

void sample_innovations(const InnovationModel& model, Stream& stream, std::span<double> out) {
  for (double& value : out) value = model.draw(stream);
}

std::vector<double> sample_innovations(const InnovationModel& model, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw DomainError("sample_innovations requires n >= 1");
  std::vector<double> out(n);
  Stream stream(seed);
  sample_innovations(model, stream, out);
  return out;
}

double compute_bn(const InnovationModel& model, std::size_t n, const BnSearchOptions& options) {
  const double b0 = model.b0();
  if (n == 0) return b0;
  const double floor = b0 + 1.0;
  const double j = static_cast<double>(n);

  if (std::holds_alternative<RademacherKind>(model.kind())) {
    // l == 1 on [1, inf), so l(s)/s^2 <= 1/j iff s >= sqrt(j).
    double s = std::sqrt(j);
    if (s * s < j) s = std::nextafter(s, INFINITY);  // keep j <= s*s in floating point
    return std::max(floor, s);
  }

  const auto satisfied = [&](double s) { return j * model.l(s) <= s * s; };
  if (satisfied(floor)) return floor;

  // Step geometrically to the first grid point that satisfies the bound, then
  // bisect inside the last failing step.
  double lo = floor;
  double hi = 2.0 * floor;
  while (!satisfied(hi)) {
    lo = hi;
    hi *= 2.0;
    if (hi > options.upper_bound) {
      throw BracketError("cannot bracket b_n for n = " + std::to_string(n) + " below " +
                         std::to_string(options.upper_bound));
    }
  }
  while (hi - lo > options.relative_tolerance * hi) {
    const double mid = 0.5 * (lo + hi);
    (satisfied(mid) ? hi : lo) = mid;
  }
  return hi;
}

double l_at_bn(const InnovationModel& model, std::size_t n) { return model.l(compute_bn(model, n)); }

BnSequence::BnSequence(InnovationModel model) : model_(std::move(model)), b0_(model_.b0()) { values_[0] = b0_; }

double BnSequence::operator[](std::size_t n) {
  auto it = values_.find(n);
  if (it == values_.end()) it = values_.emplace(n, compute_bn(model_, n)).first;
  return it->second;
}

}  // namespace arlim
