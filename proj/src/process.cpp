#include "arlim/process.hpp"

#include <cmath>
#include <string>

#include "arlim/errors.hpp"

namespace arlim {

namespace {

// |rho|^n must stay below 1e300.
constexpr double kMaxLogGrowth = 300.0 * 2.302585092994045684;

void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) throw DomainError(std::string(name) + " must be finite");
}

}  // namespace

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::P1: return "P1";
    case Regime::P2: return "P2";
    case Regime::P3: return "P3";
    case Regime::P4: return "P4";
    case Regime::P5: return "P5";
    case Regime::P6: return "P6";
  }
  return "?";
}

Regime parse_regime(const std::string& tag) {
  for (Regime r : {Regime::P1, Regime::P2, Regime::P3, Regime::P4, Regime::P5, Regime::P6}) {
    if (to_string(r) == tag) return r;
  }
  throw DomainError("unknown regime tag '" + tag + "' (expected P1..P6)");
}

RegimeSpec RegimeSpec::stationary(double rho) {
  require_finite(rho, "rho");
  if (!(std::fabs(rho) < 1.0)) throw DomainError("P1 requires |rho| < 1");
  return RegimeSpec(Regime::P1, rho, 0.0, 0.0);
}

RegimeSpec RegimeSpec::explosive(double rho) {
  require_finite(rho, "rho");
  if (!(std::fabs(rho) > 1.0)) throw DomainError("P2 requires |rho| > 1");
  return RegimeSpec(Regime::P2, rho, 0.0, 0.0);
}

RegimeSpec RegimeSpec::unit_root() { return RegimeSpec(Regime::P3, 1.0, 0.0, 0.0); }

RegimeSpec RegimeSpec::near_unit_root(double c) {
  require_finite(c, "c");
  if (c == 0.0) throw DomainError("P4 requires c != 0");
  return RegimeSpec(Regime::P4, 0.0, c, 0.0);
}

RegimeSpec RegimeSpec::moderate_deviation(double c, double alpha) {
  require_finite(c, "c");
  require_finite(alpha, "alpha");
  if (c == 0.0) throw DomainError("P5/P6 require c != 0");
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("P5/P6 require alpha in (0, 1)");
  return RegimeSpec(c < 0.0 ? Regime::P5 : Regime::P6, 0.0, c, alpha);
}

RegimeSpec RegimeSpec::make(Regime tag, double rho, double c, double alpha) {
  switch (tag) {
    case Regime::P1: return stationary(rho);
    case Regime::P2: return explosive(rho);
    case Regime::P3: return unit_root();
    case Regime::P4: return near_unit_root(c);
    case Regime::P5:
      if (!(c < 0.0)) throw DomainError("P5 requires c < 0");
      return moderate_deviation(c, alpha);
    case Regime::P6:
      if (!(c > 0.0)) throw DomainError("P6 requires c > 0");
      return moderate_deviation(c, alpha);
  }
  throw DomainError("unknown regime");
}

double resolve_rho(const RegimeSpec& regime, std::size_t n) {
  if (n == 0) throw DomainError("resolve_rho requires n >= 1");
  const double nd = static_cast<double>(n);
  switch (regime.tag()) {
    case Regime::P1:
    case Regime::P2: return regime.rho();
    case Regime::P3: return 1.0;
    case Regime::P4: return 1.0 + regime.c() / nd;
    case Regime::P5:
    case Regime::P6: return 1.0 + regime.c() / std::pow(nd, regime.alpha());
  }
  return regime.rho();
}

Ar1Path simulate_path(double rho_n, double mu, double y0, std::vector<double> innovations) {
  require_finite(mu, "mu");
  require_finite(y0, "y0");
  require_finite(rho_n, "rho_n");
  const std::size_t n = innovations.size();
  if (n < 2) throw DomainError("simulate_path requires n >= 2");
  if (std::fabs(rho_n) > 1.0 && static_cast<double>(n) * std::log(std::fabs(rho_n)) >= kMaxLogGrowth) {
    throw OverflowError("|rho_n|^n exceeds 1e300 for rho_n = " + std::to_string(rho_n) +
                        ", n = " + std::to_string(n));
  }

  Ar1Path path;
  path.mu = mu;
  path.rho_n = rho_n;
  path.y0 = y0;
  path.e = std::move(innovations);
  path.y.resize(n);
  Real previous = path.y0;
  for (std::size_t t = 0; t < n; ++t) {
    previous = path.mu + path.rho_n * previous + path.e[t];
    path.y[t] = previous;
  }
  return path;
}

Ar1Path simulate_path(const RegimeSpec& regime, double mu, double y0, const InnovationModel& model,
                      std::size_t n, std::uint64_t seed) {
  if (n < 2) throw DomainError("simulate_path requires n >= 2");
  return simulate_path(resolve_rho(regime, n), mu, y0, sample_innovations(model, n, seed));
}

Real max_recursion_residual(const Ar1Path& path) {
  Real worst = 0;
  for (std::size_t t = 1; t <= path.n(); ++t) {
    const Real residual = abs(path.y[t - 1] - path.mu - path.rho_n * path.lagged(t) - path.e[t - 1]);
    if (residual > worst) worst = residual;
  }
  return worst;
}

std::vector<Real> companion_series(const Ar1Path& path, Companion kind) {
  std::vector<Real> out(path.n());
  switch (kind) {
    case Companion::Centered: {
      if (path.rho_n == 1) throw DomainError("centered series requires rho_n != 1");
      const Real level = path.mu / (1 - path.rho_n);
      for (std::size_t t = 0; t < path.n(); ++t) out[t] = path.y[t] - level;
      break;
    }
    case Companion::TildeExplosive:
    case Companion::TildeUnit: {
      Real previous = kind == Companion::TildeExplosive ? path.y0 : Real(0);
      for (std::size_t t = 0; t < path.n(); ++t) {
        previous = path.rho_n * previous + path.e[t];
        out[t] = previous;
      }
      break;
    }
  }
  return out;
}

}  // namespace arlim
