#include "arlim/limit_laws.hpp"

#include <cmath>
#include <string>

#include "arlim/errors.hpp"

namespace arlim {

namespace {

// expm1(x)/x, continuous through x = 0.
double expm1_ratio(double x) {
  if (std::fabs(x) < 1e-8) return 1.0 + x / 2.0 + x * x / 6.0;
  return std::expm1(x) / x;
}

constexpr double kSeriesRadius = 0.5;
constexpr int kSeriesTerms = 40;

}  // namespace

double j_c(double c, double s) { return s * expm1_ratio(c * s); }

double b_c(double c, double s) {
  // e^{2c}(e^{-2cs} - 1)/(-2c) = e^{2c} s expm1(-2cs)/(-2cs)
  return std::exp(2.0 * c) * s * expm1_ratio(-2.0 * c * s);
}

double integral_j(double c) {
  if (std::fabs(c) < kSeriesRadius) {
    // Σ_{k>=0} c^k/(k+2)!
    double term = 0.5;
    double sum = 0.0;
    for (int k = 0; k < kSeriesTerms; ++k) {
      sum += term;
      term *= c / (k + 3);
    }
    return sum;
  }
  return (std::expm1(c) - c) / (c * c);
}

double integral_j_sq(double c) {
  if (std::fabs(c) < kSeriesRadius) {
    // (e^x - 1)^2 = Σ_{k>=2} (2^k - 2) x^k/k!, so ∫_0^1 J_c² = Σ_{k>=2} (2^k - 2) c^{k-2}/(k!(k+1)).
    double sum = 0.0;
    double power_c = 1.0;     // c^{k-2}
    double factorial = 2.0;   // k!
    double two_k = 4.0;       // 2^k
    for (int k = 2; k < kSeriesTerms + 2; ++k) {
      sum += (two_k - 2.0) * power_c / (factorial * (k + 1));
      power_c *= c;
      factorial *= k + 1;
      two_k *= 2.0;
    }
    return sum;
  }
  return (std::expm1(2.0 * c) / (2.0 * c) - 2.0 * std::expm1(c) / c + 1.0) / (c * c);
}

double j_dispersion(double c) {
  const double mean = integral_j(c);
  return integral_j_sq(c) - mean * mean;
}

BrownianGrid BrownianGrid::sample(std::size_t m, Stream& stream) {
  if (m == 0) throw DomainError("Brownian grid needs m >= 1");
  BrownianGrid grid;
  grid.m = m;
  grid.increments.resize(m);
  grid.w.assign(m + 1, 0.0);
  const double sd = 1.0 / std::sqrt(static_cast<double>(m));
  for (std::size_t k = 0; k < m; ++k) {
    grid.increments[k] = stream.normal(sd);
    grid.w[k + 1] = grid.w[k] + grid.increments[k];
  }
  return grid;
}

BrownianFunctionals sample_brownian_functionals(double c, std::size_t m, Stream& stream) {
  if (m < 100) throw DomainError("Brownian functionals need m >= 100");
  const double step = 1.0 / static_cast<double>(m);
  const double sd = std::sqrt(step);
  // J(s + h) = e^{ch} J(s) + J(h) walks the grid without per-point exp calls.
  const double growth = std::exp(c * step);
  const double shift = j_c(c, step);

  BrownianFunctionals out{};
  double w = 0.0;
  double j = 0.0;  // J_c(k/m), left endpoint
  double ito = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    const double dw = stream.normal(sd);
    ito += j * dw;
    w += dw;
    j = growth * j + shift;
  }
  out.w1 = w;
  out.int_j = integral_j(c);
  out.int_j2 = integral_j_sq(c);
  out.int_jdw = ito;
  return out;
}

BrownianFunctionals sample_brownian_functionals(double c, std::size_t m, std::uint64_t seed) {
  Stream stream(seed);
  return sample_brownian_functionals(c, m, stream);
}

LimitDraw sample_theorem1_limit(const LimitParams& params, Stream& stream) {
  const double rho = params.regime.rho();
  if (!(std::fabs(rho) < 1.0)) throw DomainError("Theorem 1 limit requires |rho| < 1");
  const double one_minus_rho2 = 1.0 - rho * rho;
  const double w1 = stream.normal();
  const double w2 = stream.normal(1.0 / std::sqrt(one_minus_rho2));
  const double x2 = one_minus_rho2 * w2;
  if (!params.variance.is_finite()) return {w1, x2};
  const double sigma = std::sqrt(params.variance.sigma2());
  const double x1 = params.mu == 0.0 ? w1 : w1 - params.mu * (1.0 + rho) / sigma * w2;
  return {x1, x2};
}

std::size_t default_truncation(double rho) {
  const double log_rho = std::log(std::fabs(rho));
  if (!(log_rho > 0.0)) throw DomainError("truncation requires |rho| > 1");
  auto m = static_cast<std::size_t>(std::floor(12.0 * std::log(10.0) / log_rho)) + 1;
  while (std::pow(std::fabs(rho), -static_cast<double>(m)) >= 1e-12) ++m;
  return m;
}

namespace {

void check_truncation(double rho, std::size_t truncation) {
  if (truncation < 2 || !(std::pow(std::fabs(rho), -static_cast<double>(truncation)) < 1e-12)) {
    throw DomainError("truncation M = " + std::to_string(truncation) + " leaves |rho|^-M >= 1e-12");
  }
}

LimitDraw theorem2_draw(const LimitParams& params, const InnovationModel& model, std::size_t truncation,
                        double root_l, Stream& stream) {
  const double rho = params.regime.rho();
  const double w1 = stream.normal();
  double u1 = 0.0;
  double weight = 1.0;  // rho^{-(M-t)} for t = M, M-1, ..., 1
  for (std::size_t k = 0; k < truncation; ++k) {
    u1 += weight * model.draw(stream);
    weight /= rho;
  }
  u1 /= root_l;
  double tail = 0.0;
  weight = 1.0 / rho;  // rho^{-t}, t = 1..M-1
  for (std::size_t t = 1; t < truncation; ++t) {
    tail += weight * model.draw(stream);
    weight /= rho;
  }
  const double u2 = rho * params.y0 + rho * tail / root_l;
  const double denominator = u2 + params.mu * rho / (rho - 1.0);
  if (std::fabs(denominator) < 1e-300) throw DomainError("Theorem 2 limit: vanishing denominator");
  return {w1, (rho * rho - 1.0) * u1 / denominator};
}

}  // namespace

LimitDraw sample_theorem2_limit(const LimitParams& params, const InnovationModel& model, std::size_t truncation,
                                Stream& stream) {
  const double rho = params.regime.rho();
  if (!(std::fabs(rho) > 1.0)) throw DomainError("Theorem 2 limit requires |rho| > 1");
  check_truncation(rho, truncation);
  return theorem2_draw(params, model, truncation, std::sqrt(l_at_bn(model, truncation)), stream);
}

LimitDraw sample_theorem3_limit(double c, double mu, std::size_t m, Stream& stream) {
  if (mu == 0.0) throw DomainError("Theorem 3 limit requires mu != 0");
  if (m < 1000) throw DomainError("Theorem 3 limit requires grid m >= 1000");
  const BrownianFunctionals f = sample_brownian_functionals(c, m, stream);
  const double d = f.int_j2 - f.int_j * f.int_j;
  const double y1 = f.w1 * f.int_j2 - f.int_j * f.int_jdw;
  const double y2 = f.int_jdw - f.w1 * f.int_j;
  return {y1 / d, y2 / (mu * d)};
}

LimitDraw sample_theorem4_limit(const LimitParams& params, Stream& stream) {
  const RegimeSpec& regime = params.regime;
  const double c = regime.c();
  const double mu = params.mu;
  if (regime.tag() == Regime::P6) {
    if (mu == 0.0) throw DomainError("Theorem 4 (P6) limit requires mu != 0");
    const double v21 = stream.normal();
    const double v23 = stream.normal(std::sqrt(1.0 / (2.0 * c)));
    return {v21, 2.0 * c * c / mu * v23};
  }
  if (regime.tag() != Regime::P5) throw DomainError("Theorem 4 limit requires P5 or P6");

  const double alpha = regime.alpha();
  const double sd = std::sqrt(-1.0 / (2.0 * c));
  const double v12 = stream.normal(sd);
  const double v14 = stream.normal(sd);
  double z = 0.0;
  double d = 0.0;
  if (params.variance.is_finite()) {
    const double sigma2 = params.variance.sigma2();
    const double sigma = std::sqrt(sigma2);
    if (alpha >= 0.5) {
      z += mu * sigma / c * v12;
      d += mu * mu / (-2.0 * c * c * c);
    }
    if (alpha <= 0.5) {
      z += sigma2 * v14;
      d += sigma2 / (-2.0 * c);
    }
  } else if (alpha > 0.5) {
    z = mu / c * v12;
    d = mu * mu / (-2.0 * c * c * c);
  } else {
    z = v14;
    d = 1.0 / (-2.0 * c);
  }
  if (!(d > 0.0)) throw DomainError("Theorem 4 (P5) limit: d must be positive (mu != 0 required)");
  return {mu / (c * d) * z, z / d};
}

Lemma3Functionals sample_lemma3_functionals(double c, std::size_t m, Stream& stream) {
  if (m < 1000) throw DomainError("Lemma 3 functionals require grid m >= 1000");
  const double step = 1.0 / static_cast<double>(m);
  double w = 0.0;  // W(B_c(s_k))
  double previous_time = 0.0;
  double sum_y2 = 0.0;
  double sum_y = 0.0;
  double first_y2 = 0.0, first_y = 0.0, last_y2 = 0.0, last_y = 0.0;
  for (std::size_t k = 0; k <= m; ++k) {
    const double s = static_cast<double>(k) * step;
    if (k > 0) {
      const double time = b_c(c, s);
      w += stream.normal(std::sqrt(time - previous_time));
      previous_time = time;
    }
    const double y = std::exp(-c * (1.0 - s)) * w;
    sum_y += y;
    sum_y2 += y * y;
    if (k == 0) {
      first_y = y;
      first_y2 = y * y;
    }
    last_y = y;
    last_y2 = y * y;
  }
  Lemma3Functionals out{};
  out.int_y2 = step * (sum_y2 - 0.5 * (first_y2 + last_y2));
  out.int_y = step * (sum_y - 0.5 * (first_y + last_y));
  out.int_ydw = -c * out.int_y2 + (w * w - 1.0) / 2.0;
  return out;
}

void check_limit_params(const LimitParams& params, const LimitSamplerOptions& options) {
  const RegimeSpec& regime = params.regime;
  switch (regime.tag()) {
    case Regime::P1:
      if (params.variance.is_finite() && params.mu != 0.0 && !(params.variance.sigma2() > 0.0)) {
        throw DomainError("Theorem 1 limit with mu != 0 needs sigma^2 > 0");
      }
      break;
    case Regime::P2: {
      const std::size_t m = options.truncation == 0 ? default_truncation(regime.rho()) : options.truncation;
      check_truncation(regime.rho(), m);
      break;
    }
    case Regime::P3:
    case Regime::P4:
      if (params.mu == 0.0) throw DomainError("Theorem 3 limit requires mu != 0");
      if (options.grid_m < 1000) throw DomainError("Theorem 3 limit requires grid m >= 1000");
      break;
    case Regime::P5:
    case Regime::P6:
      if (params.mu == 0.0) throw DomainError("Theorem 4 limit requires mu != 0");
      break;
  }
}

LimitSampler::LimitSampler(LimitParams params, InnovationModel model, LimitSamplerOptions options)
    : params_(std::move(params)), model_(std::move(model)), options_(options) {
  check_limit_params(params_, options_);
  if (params_.regime.tag() == Regime::P2) {
    if (options_.truncation == 0) options_.truncation = default_truncation(params_.regime.rho());
    root_l_ = std::sqrt(l_at_bn(model_, options_.truncation));
  }
}

LimitDraw LimitSampler::operator()(Stream& stream) const {
  switch (params_.regime.tag()) {
    case Regime::P1: return sample_theorem1_limit(params_, stream);
    case Regime::P2: return theorem2_draw(params_, model_, options_.truncation, root_l_, stream);
    case Regime::P3: return sample_theorem3_limit(0.0, params_.mu, options_.grid_m, stream);
    case Regime::P4: return sample_theorem3_limit(params_.regime.c(), params_.mu, options_.grid_m, stream);
    case Regime::P5:
    case Regime::P6: return sample_theorem4_limit(params_, stream);
  }
  throw DomainError("unknown regime");
}

LimitDraw sample_limit(const LimitParams& params, const InnovationModel& model, const LimitSamplerOptions& options,
                       Stream& stream) {
  return LimitSampler(params, model, options)(stream);
}

}  // namespace arlim
