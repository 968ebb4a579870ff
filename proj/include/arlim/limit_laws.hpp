#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "arlim/innovations.hpp"
#include "arlim/process.hpp"
#include "arlim/rng.hpp"

namespace arlim {

/// J_c(s) = (e^{cs} - 1)/c, with J_0(s) = s.
double j_c(double c, double s);

/// B_c(s) = e^{2c}(e^{-2cs} - 1)/(-2c), with B_0(s) = s.
double b_c(double c, double s);

/// ∫_0^1 J_c(s) ds and ∫_0^1 J_c(s)^2 ds in closed form.
double integral_j(double c);
double integral_j_sq(double c);

/// d = ∫J_c² − (∫J_c)².
double j_dispersion(double c);

/// Standard Brownian motion on a uniform grid of m steps over [0, 1].
struct BrownianGrid {
  std::size_t m = 0;
  std::vector<double> increments;  // iid N(0, 1/m)
  std::vector<double> w;           // w[0] = 0, w[k] = W(k/m)

  static BrownianGrid sample(std::size_t m, Stream& stream);
};

struct BrownianFunctionals {
  double w1;      // W(1)
  double int_j;   // ∫ J_c ds
  double int_j2;  // ∫ J_c² ds
  double int_jdw; // Σ_k J_c(k/m)(W((k+1)/m) − W(k/m))
};

BrownianFunctionals sample_brownian_functionals(double c, std::size_t m, Stream& stream);
BrownianFunctionals sample_brownian_functionals(double c, std::size_t m, std::uint64_t seed);

struct LimitParams {
  RegimeSpec regime = RegimeSpec::unit_root();
  double mu = 0;
  double y0 = 0;
  VarianceClass variance = VarianceClass::finite(1.0);
};

using LimitDraw = std::pair<double, double>;

/// (X1, X2) under P1.
LimitDraw sample_theorem1_limit(const LimitParams& params, Stream& stream);

/// Smallest M with |rho|^{-M} < 1e-12.
std::size_t default_truncation(double rho);

/// (W1, (rho²−1) U1/(U2 + μρ/(ρ−1))) under P2, with U1 and U2 built from the
/// innovation model over M terms.
LimitDraw sample_theorem2_limit(const LimitParams& params, const InnovationModel& model, std::size_t truncation,
                                Stream& stream);

/// (Y1/d, Y2/(μ d)) under P3/P4.
LimitDraw sample_theorem3_limit(double c, double mu, std::size_t m, Stream& stream);

/// Under P5 the degenerate pair (μ/(cd), 1/d)·Z; under P6 (V21, (2c²/μ)V23).
LimitDraw sample_theorem4_limit(const LimitParams& params, Stream& stream);

struct Lemma3Functionals {
  double int_y2;   // ∫ e^{-2c(1-s)} W²(B_c(s)) ds
  double int_y;    // ∫ e^{-c(1-s)} W(B_c(s)) ds
  double int_ydw;  // −c int_y2 + (W²(B_c(1)) − 1)/2
};

Lemma3Functionals sample_lemma3_functionals(double c, std::size_t m, Stream& stream);

struct LimitSamplerOptions {
  std::size_t grid_m = 1000;
  std::size_t truncation = 0;  // 0 selects default_truncation(rho)
};

/// The limit law matching params.regime, with per-law constants (l(b_M),
/// truncation) resolved once.
class LimitSampler {
 public:
  LimitSampler(LimitParams params, InnovationModel model, LimitSamplerOptions options);

  LimitDraw operator()(Stream& stream) const;
  const LimitSamplerOptions& options() const { return options_; }

 private:
  LimitParams params_;
  InnovationModel model_;
  LimitSamplerOptions options_;
  double root_l_ = 1.0;
};

/// One draw from the limit law matching params.regime.
LimitDraw sample_limit(const LimitParams& params, const InnovationModel& model, const LimitSamplerOptions& options,
                       Stream& stream);

/// Validates that a limit law exists for the parameters (e.g. μ ≠ 0 where required).
void check_limit_params(const LimitParams& params, const LimitSamplerOptions& options);

}  // namespace arlim
