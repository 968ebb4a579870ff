#include "arlim/estimator.hpp"

#include <cmath>
#include <limits>

#include "arlim/errors.hpp"

namespace arlim {

namespace {

void require_length(const Ar1Path& path) {
  if (path.n() < 2) throw DomainError("least squares requires n >= 2");
}

bool has_innovations(const Ar1Path& path) { return path.e.size() == path.n(); }

void check_singular(const Real& delta3, const Real& n_sum_lag_sq) {
  if (!(delta3 > kSingularThreshold * n_sum_lag_sq) || n_sum_lag_sq == 0) {
    throw SingularDesign("lagged regressor has no spread (delta3 <= 1e-12 n sum y_{t-1}^2)");
  }
}

}  // namespace

LsEstimate ls_estimate(const Ar1Path& path) {
  require_length(path);
  const std::size_t n = path.n();
  const Real nr = static_cast<double>(n);
  const bool with_e = has_innovations(path);

  RegressionSums s;
  s.n = n;
  for (std::size_t t = 1; t <= n; ++t) {
    const Real& x = path.lagged(t);
    const Real& z = path.y[t - 1];
    s.sum_lag += x;
    s.sum_cur += z;
    s.sum_lag_sq += x * x;
    s.sum_cross += x * z;
    if (with_e) {
      s.sum_e += path.e[t - 1];
      s.sum_lag_e += x * path.e[t - 1];
    }
  }
  s.lag_mean = s.sum_lag / nr;
  s.cur_mean = s.sum_cur / nr;
  // Second pass about the means keeps Δ3 = n·Sxx free of the cancellation in
  // nΣx² − (Σx)² when the level is large relative to the spread.
  for (std::size_t t = 1; t <= n; ++t) {
    const Real dx = path.lagged(t) - s.lag_mean;
    s.sxx += dx * dx;
    s.sxz += dx * (path.y[t - 1] - s.cur_mean);
    if (with_e) s.sxe += dx * path.e[t - 1];
  }

  LsEstimate est;
  est.sums = s;
  est.delta3 = nr * s.sxx;
  check_singular(est.delta3, nr * s.sum_lag_sq);
  est.rho_hat = s.sxz / s.sxx;
  est.mu_hat = s.cur_mean - est.rho_hat * s.lag_mean;
  if (with_e) {
    // Δ1 = Sxx Σe − n x̄ Sxe and Δ2 = n Sxe, algebraically equal to the raw forms.
    est.delta1 = s.sxx * s.sum_e - nr * s.lag_mean * s.sxe;
    est.delta2 = nr * s.sxe;
  } else {
    est.delta1 = est.delta2 = std::numeric_limits<Real>::quiet_NaN();
  }
  return est;
}

LsEstimate normal_equations_oracle(const Ar1Path& path) {
  require_length(path);
  const std::size_t n = path.n();
  const Real nr = static_cast<double>(n);

  // Shift by a pivot so X'X is well conditioned, then solve
  //   [ n    Σx' ] [a]   [ Σz'   ]
  //   [ Σx'  Σx'²] [b] = [ Σx'z' ]
  // with x' = x − p, z' = z − p; the fit z' = a + b x' maps back to
  // rho = b, mu = a + p(1 − b).
  Real pivot = 0;
  for (std::size_t t = 1; t <= n; ++t) pivot += path.lagged(t);
  pivot /= nr;

  Real a11 = nr, a12 = 0, a22 = 0, r1 = 0, r2 = 0, raw_sq = 0;
  for (std::size_t t = 1; t <= n; ++t) {
    const Real xs = path.lagged(t) - pivot;
    const Real zs = path.y[t - 1] - pivot;
    a12 += xs;
    a22 += xs * xs;
    r1 += zs;
    r2 += xs * zs;
    raw_sq += path.lagged(t) * path.lagged(t);
  }
  const Real det = a11 * a22 - a12 * a12;
  check_singular(det, nr * raw_sq);

  LsEstimate est;
  const Real a = (a22 * r1 - a12 * r2) / det;
  const Real b = (a11 * r2 - a12 * r1) / det;
  est.rho_hat = b;
  est.mu_hat = a + pivot * (1 - b);
  est.delta3 = det;
  est.sums.n = n;

  if (has_innovations(path)) {
    Real sum_e = 0, sum_xe = 0, sum_x = 0, sum_xx = 0;
    for (std::size_t t = 1; t <= n; ++t) {
      const Real x = path.lagged(t) - pivot;
      const Real e = path.e[t - 1];
      sum_e += e;
      sum_xe += x * e;
      sum_x += x;
      sum_xx += x * x;
    }
    // Shift-invariant: Δ2 and the pivoted Δ1 give the same ratios.
    est.delta2 = nr * sum_xe - sum_x * sum_e;
    const Real delta1_shifted = sum_xx * sum_e - sum_x * sum_xe;
    est.delta1 = delta1_shifted - pivot * est.delta2;
  } else {
    est.delta1 = est.delta2 = std::numeric_limits<Real>::quiet_NaN();
  }
  return est;
}

Rates convergence_rates(const RegimeSpec& regime, const VarianceClass& variance, double l_bn, std::size_t n) {
  const double nd = static_cast<double>(n);
  const double root_n_over_l = std::sqrt(nd / l_bn);
  Rates rates;
  switch (regime.tag()) {
    case Regime::P1:
      rates.mu_rate = root_n_over_l;
      rates.rho_rate = std::sqrt(nd);
      break;
    case Regime::P2:
      rates.mu_rate = root_n_over_l;
      rates.rho_rate = std::pow(regime.rho(), nd);
      break;
    case Regime::P3:
    case Regime::P4:
      rates.mu_rate = root_n_over_l;
      rates.rho_rate = std::sqrt(nd * nd * nd / l_bn);
      break;
    case Regime::P5: {
      const double alpha = regime.alpha();
      double a_n;
      if (variance.is_finite()) {
        a_n = std::pow(nd, std::max(alpha, 0.5) - alpha / 2.0);
      } else {
        a_n = alpha > 0.5 ? std::sqrt(std::pow(nd, alpha) / l_bn) : std::sqrt(std::pow(nd, 1.0 - alpha));
      }
      rates.mu_rate = a_n;
      rates.rho_rate = a_n * std::pow(nd, alpha);
      break;
    }
    case Regime::P6: {
      const double rho_n = resolve_rho(regime, n);
      rates.mu_rate = root_n_over_l;
      rates.rho_rate = std::sqrt(std::pow(nd, 3.0 * regime.alpha()) / l_bn) * std::pow(rho_n, nd);
      break;
    }
  }
  return rates;
}

Rates convergence_rates(const RegimeSpec& regime, const InnovationModel& model, std::size_t n) {
  return convergence_rates(regime, model.variance_class(), l_at_bn(model, n), n);
}

ScaledError scale_error(const LsEstimate& estimate, const Truth& truth, const Rates& rates) {
  ScaledError out;
  out.rates = rates;
  out.mu_component = static_cast<double>(Real(rates.mu_rate) * (estimate.mu_hat - truth.mu));
  out.rho_component = static_cast<double>(Real(rates.rho_rate) * (estimate.rho_hat - truth.rho_n));
  return out;
}

ScaledError scale_error(const LsEstimate& estimate, const Truth& truth, const RegimeSpec& regime,
                        const InnovationModel& model, std::size_t n) {
  return scale_error(estimate, truth, convergence_rates(regime, model, n));
}

}  // namespace arlim
