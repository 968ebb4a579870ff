#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "arlim/innovations.hpp"
#include "arlim/real.hpp"

namespace arlim {

enum class Regime {
  P1,  // |rho| < 1
  P2,  // |rho| > 1
  P3,  // rho = 1
  P4,  // rho = 1 + c/n, c != 0
  P5,  // rho = 1 + c/n^alpha, c < 0, 0 < alpha < 1
  P6,  // rho = 1 + c/n^alpha, c > 0, 0 < alpha < 1
};

std::string to_string(Regime regime);
Regime parse_regime(const std::string& tag);

class RegimeSpec {
 public:
  static RegimeSpec stationary(double rho);
  static RegimeSpec explosive(double rho);
  static RegimeSpec unit_root();
  static RegimeSpec near_unit_root(double c);
  static RegimeSpec moderate_deviation(double c, double alpha);
  /// Builds from a tag plus whichever parameters that tag uses; validates domains.
  static RegimeSpec make(Regime tag, double rho, double c, double alpha);

  Regime tag() const { return tag_; }
  double rho() const { return rho_; }
  double c() const { return c_; }
  double alpha() const { return alpha_; }

 private:
  RegimeSpec(Regime tag, double rho, double c, double alpha) : tag_(tag), rho_(rho), c_(c), alpha_(alpha) {}
  Regime tag_;
  double rho_ = 0.0;
  double c_ = 0.0;
  double alpha_ = 0.0;
};

double resolve_rho(const RegimeSpec& regime, std::size_t n);

/// y_t = mu + rho_n y_{t-1} + e_t, t = 1..n. y holds y_1..y_n; y0 is separate.
struct Ar1Path {
  Real mu = 0;
  Real rho_n = 0;
  Real y0 = 0;
  std::vector<Real> y;
  std::vector<double> e;

  std::size_t n() const { return y.size(); }
  /// y_{t-1} for t = 1..n.
  const Real& lagged(std::size_t t) const { return t == 1 ? y0 : y[t - 2]; }
};

/// Runs the recursion for given innovations.
Ar1Path simulate_path(double rho_n, double mu, double y0, std::vector<double> innovations);

Ar1Path simulate_path(const RegimeSpec& regime, double mu, double y0, const InnovationModel& model,
                      std::size_t n, std::uint64_t seed);

/// max_t |y_t - mu - rho_n y_{t-1} - e_t|.
Real max_recursion_residual(const Ar1Path& path);

enum class Companion {
  Centered,        // y_t - mu/(1 - rho)
  TildeExplosive,  // sum rho^{t-i} e_i + rho^t y0
  TildeUnit,       // sum rho^{t-i} e_i
};

/// Companion series indexed t = 1..n.
std::vector<Real> companion_series(const Ar1Path& path, Companion kind);

}  // namespace arlim
