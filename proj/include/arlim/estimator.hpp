#pragma once

#include <cstddef>

#include "arlim/innovations.hpp"
#include "arlim/process.hpp"
#include "arlim/real.hpp"

namespace arlim {

/// Raw and centered sums over t = 1..n with x_t = y_{t-1}, z_t = y_t.
struct RegressionSums {
  std::size_t n = 0;
  Real sum_lag = 0;     // sum y_{t-1}
  Real sum_cur = 0;     // sum y_t
  Real sum_lag_sq = 0;  // sum y_{t-1}^2
  Real sum_cross = 0;   // sum y_t y_{t-1}
  Real sum_e = 0;       // sum e_t
  Real sum_lag_e = 0;   // sum y_{t-1} e_t
  Real lag_mean = 0;
  Real cur_mean = 0;
  Real sxx = 0;  // sum (x - xbar)^2
  Real sxz = 0;  // sum (x - xbar)(z - zbar)
  Real sxe = 0;  // sum (x - xbar) e
};

struct LsEstimate {
  Real mu_hat = 0;
  Real rho_hat = 0;
  // Δ1 = Σx²Σe − ΣxΣxe, Δ2 = nΣxe − ΣxΣe, Δ3 = nΣx² − (Σx)². Δ1, Δ2 use the
  // path's innovations and are NaN when the path carries none.
  Real delta1 = 0;
  Real delta2 = 0;
  Real delta3 = 0;
  RegressionSums sums;
};

inline constexpr double kSingularThreshold = 1e-12;

/// Least squares fit of y_t on (1, y_{t-1}). Throws SingularDesign when
/// Δ3 <= 1e-12 n Σy_{t-1}².
LsEstimate ls_estimate(const Ar1Path& path);

/// Independent route: forms X'X and X'y from raw sums about a pivot and
/// solves the 2x2 system by Cramer's rule.
LsEstimate normal_equations_oracle(const Ar1Path& path);

struct Rates {
  double mu_rate = 0;
  double rho_rate = 0;
};

struct ScaledError {
  double mu_component = 0;
  double rho_component = 0;
  Rates rates;
};

struct Truth {
  Real mu;
  Real rho_n;
};

/// Normalizing rates for the regime at sample size n, given l(b_n).
Rates convergence_rates(const RegimeSpec& regime, const VarianceClass& variance, double l_bn, std::size_t n);
Rates convergence_rates(const RegimeSpec& regime, const InnovationModel& model, std::size_t n);

ScaledError scale_error(const LsEstimate& estimate, const Truth& truth, const Rates& rates);
ScaledError scale_error(const LsEstimate& estimate, const Truth& truth, const RegimeSpec& regime,
                        const InnovationModel& model, std::size_t n);

}  // namespace arlim
