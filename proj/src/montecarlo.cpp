#include "arlim/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <string>

#include "arlim/errors.hpp"
#include "arlim/estimator.hpp"

namespace arlim {

namespace {

constexpr std::uint64_t kLimitStreamTag = 0x4c494d4954ULL;  // "LIMIT"

LimitParams limit_params(const ExperimentConfig& config) {
  LimitParams params;
  params.regime = config.regime;
  params.mu = config.mu;
  params.y0 = config.y0;
  params.variance = config.model.variance_class();
  return params;
}

LimitSamplerOptions sampler_options(const ExperimentConfig& config) {
  return LimitSamplerOptions{config.grid_m, config.truncation};
}

}  // namespace

std::uint64_t replication_seed(std::uint64_t master, std::size_t n, std::size_t r) {
  return derive_seed(master, n, r);
}

std::uint64_t limit_draw_seed(std::uint64_t master, std::size_t i) {
  return derive_seed(master ^ kLimitStreamTag, i, kLimitStreamTag);
}

bool uses_trimmed_rmse(Regime regime) { return regime == Regime::P2 || regime == Regime::P6; }

void validate(const ExperimentConfig& config) {
  if (config.replications < 100) throw ConfigError("replications must be >= 100");
  if (config.limit_draws < 1000) throw ConfigError("limit_draws must be >= 1000");
  if (config.n_list.empty()) throw ConfigError("n_list must not be empty");
  std::set<std::size_t> seen;
  for (std::size_t n : config.n_list) {
    if (n < 50) throw ConfigError("every n in n_list must be >= 50 (got " + std::to_string(n) + ")");
    if (!seen.insert(n).second) throw ConfigError("duplicate n in n_list: " + std::to_string(n));
    const double rho_n = resolve_rho(config.regime, n);
    if (std::fabs(rho_n) > 1.0 && static_cast<double>(n) * std::log(std::fabs(rho_n)) >= 300.0 * std::log(10.0)) {
      throw ConfigError("|rho_n|^n exceeds 1e300 at n = " + std::to_string(n));
    }
  }
  if (!std::isfinite(config.mu) || !std::isfinite(config.y0)) throw ConfigError("mu and y0 must be finite");
  try {
    check_limit_params(limit_params(config), sampler_options(config));
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

McReport run_experiment(const ExperimentConfig& config, const RunOptions& options) {
  validate(config);
  const std::size_t sizes = config.n_list.size();
  const std::size_t reps = config.replications;

  McReport report;
  report.config = config;
  report.runs.resize(sizes);

  // Rates need l(b_n); a model whose b_n is undefined only fails if some
  // replication actually has to be scaled.
  std::vector<std::optional<Rates>> rates(sizes);
  std::vector<std::string> rate_errors(sizes);
  for (std::size_t i = 0; i < sizes; ++i) {
    SampleSizeReport& run = report.runs[i];
    run.n = config.n_list[i];
    run.rho_n = resolve_rho(config.regime, run.n);
    try {
      run.bn = compute_bn(config.model, run.n);
      run.l_bn = config.model.l(run.bn);
      rates[i] = convergence_rates(config.regime, config.model.variance_class(), run.l_bn, run.n);
      run.rates = *rates[i];
    } catch (const BracketError& e) {
      run.bn = run.l_bn = std::nan("");
      rate_errors[i] = e.what();
    }
  }

  report.replications.resize(sizes * reps);
  parallel_for(sizes * reps, options.workers, [&](std::size_t task) {
    const std::size_t i = task / reps;
    const std::size_t r = task % reps;
    const std::size_t n = config.n_list[i];
    Replication& rep = report.replications[task];
    rep.n = n;
    rep.r = r;
    const Ar1Path path =
        simulate_path(config.regime, config.mu, config.y0, config.model, n, replication_seed(config.seed, n, r));
    LsEstimate estimate;
    try {
      estimate = ls_estimate(path);
    } catch (const SingularDesign&) {
      rep.singular = true;
      return;
    }
    if (!rates[i]) throw Error("cannot scale errors at n = " + std::to_string(n) + ": " + rate_errors[i]);
    const Truth truth{path.mu, path.rho_n};
    const ScaledError scaled = scale_error(estimate, truth, *rates[i]);
    rep.mu_hat = static_cast<double>(estimate.mu_hat);
    rep.rho_hat = static_cast<double>(estimate.rho_hat);
    rep.mu_error = static_cast<double>(estimate.mu_hat - truth.mu);
    rep.rho_error = static_cast<double>(estimate.rho_hat - truth.rho_n);
    rep.scaled_mu = scaled.mu_component;
    rep.scaled_rho = scaled.rho_component;
  });

  bool any_valid = false;
  std::vector<std::vector<double>> mu_errors(sizes), rho_errors(sizes);
  for (std::size_t i = 0; i < sizes; ++i) {
    SampleSizeReport& run = report.runs[i];
    for (std::size_t r = 0; r < reps; ++r) {
      const Replication& rep = report.replications[i * reps + r];
      if (rep.singular) {
        ++run.singular_count;
        continue;
      }
      run.scaled_mu.push_back(rep.scaled_mu);
      run.scaled_rho.push_back(rep.scaled_rho);
      mu_errors[i].push_back(rep.mu_error);
      rho_errors[i].push_back(rep.rho_error);
    }
    if (run.scaled_mu.empty()) continue;
    any_valid = true;
    run.mu_summary = summarize(run.scaled_mu);
    run.rho_summary = summarize(run.scaled_rho);
    if (run.scaled_mu.size() >= 2) run.correlation = pearson(run.scaled_mu, run.scaled_rho);
    const bool trimmed = uses_trimmed_rmse(config.regime.tag()) && mu_errors[i].size() >= 50;
    run.rmse_mu = trimmed ? trimmed_rmse(mu_errors[i]) : rmse(mu_errors[i]);
    run.rmse_rho = trimmed ? trimmed_rmse(rho_errors[i]) : rmse(rho_errors[i]);
  }

  if (options.draw_limits && any_valid) {
    const LimitSampler sampler(limit_params(config), config.model, sampler_options(config));
    report.limit_comp1.resize(config.limit_draws);
    report.limit_comp2.resize(config.limit_draws);
    parallel_for(config.limit_draws, options.workers, [&](std::size_t i) {
      Stream stream(limit_draw_seed(config.seed, i));
      const LimitDraw draw = sampler(stream);
      report.limit_comp1[i] = draw.first;
      report.limit_comp2[i] = draw.second;
    });
    report.limit_comp1_summary = summarize(report.limit_comp1);
    report.limit_comp2_summary = summarize(report.limit_comp2);
    report.limit_correlation = pearson(report.limit_comp1, report.limit_comp2);
    for (SampleSizeReport& run : report.runs) {
      if (run.scaled_mu.empty()) continue;
      run.ks_mu = ks_two_sample(run.scaled_mu, report.limit_comp1);
      run.ks_rho = ks_two_sample(run.scaled_rho, report.limit_comp2);
    }
  }

  if (sizes >= 3) {
    std::vector<double> ns, mu_rmse, rho_rmse;
    bool usable = true;
    for (const SampleSizeReport& run : report.runs) {
      if (!run.rmse_mu || !(*run.rmse_mu > 0.0) || !(*run.rmse_rho > 0.0)) {
        usable = false;
        break;
      }
      ns.push_back(static_cast<double>(run.n));
      mu_rmse.push_back(*run.rmse_mu);
      rho_rmse.push_back(*run.rmse_rho);
    }
    if (usable) {
      report.slope_mu = rate_slope(ns, mu_rmse);
      report.slope_rho = rate_slope(ns, rho_rmse);
    }
  }
  return report;
}

Lemma3Functionals unit_root_statistics(const Ar1Path& path, double l_bn) {
  const std::vector<Real> tilde = companion_series(path, Companion::TildeUnit);
  const Real n = static_cast<double>(path.n());
  const Real l = l_bn;
  Real sum_sq = 0, sum = 0, sum_cross = 0;
  for (std::size_t t = 0; t < tilde.size(); ++t) {
    sum_sq += tilde[t] * tilde[t];
    sum += tilde[t];
    const Real previous = t == 0 ? Real(0) : tilde[t - 1];
    sum_cross += previous * path.e[t];
  }
  Lemma3Functionals out{};
  out.int_y2 = static_cast<double>(sum_sq / (n * n * l));
  out.int_y = static_cast<double>(sum / (n * sqrt(n) * sqrt(l)));
  out.int_ydw = static_cast<double>(sum_cross / (n * l));
  return out;
}

}  // namespace arlim
