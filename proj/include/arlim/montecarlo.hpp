#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "arlim/estimator.hpp"
#include "arlim/innovations.hpp"
#include "arlim/limit_laws.hpp"
#include "arlim/parallel.hpp"
#include "arlim/process.hpp"
#include "arlim/stats.hpp"

namespace arlim {

struct ExperimentConfig {
  RegimeSpec regime = RegimeSpec::stationary(0.5);
  InnovationModel model = InnovationModel::gaussian(1.0);
  double mu = 1.0;
  double y0 = 0.0;
  std::vector<std::size_t> n_list{1000};
  std::size_t replications = 1000;
  std::size_t limit_draws = 100000;
  std::uint64_t seed = 20240601;
  std::size_t grid_m = 1000;
  std::size_t truncation = 0;  // 0 selects default_truncation(rho)
};

inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// Throws ConfigError when R < 100, L < 1000, any n < 50, or no limit law
/// exists for the parameters.
void validate(const ExperimentConfig& config);

struct RunOptions {
  unsigned workers = 1;
  bool draw_limits = true;  // false skips limit sampling and KS diagnostics
};

/// One replication outcome; estimates are rounded to double for reporting.
struct Replication {
  std::size_t n = 0;
  std::size_t r = 0;
  bool singular = false;
  double mu_hat = 0;
  double rho_hat = 0;
  double mu_error = 0;   // unscaled mu_hat − mu
  double rho_error = 0;  // unscaled rho_hat − rho_n
  double scaled_mu = 0;
  double scaled_rho = 0;
};

struct SampleSizeReport {
  std::size_t n = 0;
  double rho_n = 0;
  double bn = 0;
  double l_bn = 0;
  Rates rates;
  std::size_t singular_count = 0;
  std::vector<double> scaled_mu;
  std::vector<double> scaled_rho;
  std::optional<Summary> mu_summary;
  std::optional<Summary> rho_summary;
  std::optional<double> correlation;
  std::optional<double> ks_mu;
  std::optional<double> ks_rho;
  std::optional<double> rmse_mu;
  std::optional<double> rmse_rho;
};

struct McReport {
  ExperimentConfig config;
  std::vector<SampleSizeReport> runs;
  std::vector<Replication> replications;  // sorted by (n, r)
  std::vector<double> limit_comp1;
  std::vector<double> limit_comp2;
  std::optional<Summary> limit_comp1_summary;
  std::optional<Summary> limit_comp2_summary;
  std::optional<double> limit_correlation;
  std::optional<SlopeFit> slope_mu;
  std::optional<SlopeFit> slope_rho;
};

McReport run_experiment(const ExperimentConfig& config, const RunOptions& options = {});

/// Per-replication seed; depends only on (master, n, r).
std::uint64_t replication_seed(std::uint64_t master, std::size_t n, std::size_t r);
/// Seed of limit-law draw i.
std::uint64_t limit_draw_seed(std::uint64_t master, std::size_t i);

/// Normalized unit-root statistics of one path:
/// Σỹ_t²/(n² l), Σỹ_t/(n^{3/2}√l), Σỹ_{t−1}e_t/(n l) with ỹ the TildeUnit series.
Lemma3Functionals unit_root_statistics(const Ar1Path& path, double l_bn);

/// Whether the rate-slope RMSE is trimmed (P2 and P6).
bool uses_trimmed_rmse(Regime regime);

}  // namespace arlim
