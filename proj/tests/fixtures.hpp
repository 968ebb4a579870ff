#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "arlim/innovations.hpp"
#include "arlim/process.hpp"
#include "arlim/rng.hpp"

namespace arlim::testing {

struct Fixture {
  RegimeSpec regime = RegimeSpec::unit_root();
  double mu = 0;
  Ar1Path path;
};

// Random paths over every regime and built-in model. Explosive growth is
// capped at |rho_n|^n <= 1e12 so that intercept estimates stay well
// conditioned in quad precision.
inline std::vector<Fixture> random_fixtures(std::size_t count, std::uint64_t seed) {
  Stream s(seed, 0xf1f1);
  auto unif = [&](double lo, double hi) { return lo + (hi - lo) * s.uniform(); };
  const std::vector<InnovationModel> models{InnovationModel::gaussian(1.0), InnovationModel::gaussian(0.2),
                                            InnovationModel::uniform(3.0), InnovationModel::rademacher(),
                                            InnovationModel::pareto2()};
  std::vector<Fixture> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const int tag = static_cast<int>(i % 6);
    std::size_t n = 20 + static_cast<std::size_t>(s.uniform() * 480);
    RegimeSpec regime = RegimeSpec::unit_root();
    switch (tag) {
      case 0: regime = RegimeSpec::stationary(unif(-0.95, 0.95)); break;
      case 1: {
        const double rho = (s.uniform() < 0.5 ? -1 : 1) * unif(1.01, 1.5);
        n = std::min<std::size_t>(n, static_cast<std::size_t>(12 * std::log(10.0) / std::log(std::abs(rho))));
        regime = RegimeSpec::explosive(rho);
        break;
      }
      case 2: break;
      case 3: regime = RegimeSpec::near_unit_root((s.uniform() < 0.5 ? -1 : 1) * unif(0.5, 5)); break;
      case 4: regime = RegimeSpec::moderate_deviation(-unif(0.2, 3), unif(0.1, 0.9)); break;
      case 5: {
        const double c = unif(0.2, 2), alpha = unif(0.3, 0.9);
        while (n > 20 && c * std::pow(double(n), 1 - alpha) > 12 * std::log(10.0)) n -= 10;
        regime = RegimeSpec::moderate_deviation(c, alpha);
        break;
      }
    }
    const double mu = unif(-5, 5);
    const double y0 = unif(-3, 3);
    const auto& model = models[static_cast<std::size_t>(s.uniform() * models.size())];
    out.push_back({regime, mu, simulate_path(regime, mu, y0, model, n, derive_seed(seed, i))});
  }
  return out;
}

// |a − b| <= tol·max(|a|, |b|).
template <class T>
bool rel_close(const T& a, const T& b, double tol) {
  using std::abs;
  const T scale = std::max(abs(a), abs(b));
  return abs(a - b) <= T(tol) * scale;
}

}  // namespace arlim::testing
