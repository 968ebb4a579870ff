#include "arlim/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "arlim/config.hpp"
#include "arlim/estimator.hpp"
#include "arlim/io.hpp"

namespace arlim::cli {

namespace {

using ojson = nlohmann::ordered_json;

class HelpRequested : public std::exception {
 public:
  explicit HelpRequested(std::string text) : text_(std::move(text)) {}
  const char* what() const noexcept override { return text_.c_str(); }

 private:
  std::string text_;
};

// Raw flag values; std::optional distinguishes "given" from defaults so that
// explicit flags override config-file values.
struct CommonFlags {
  std::string config;
  std::optional<std::string> regime;
  std::optional<double> rho, c, alpha;
  std::optional<std::string> model;
  std::optional<double> sigma;
  std::optional<double> mu, y0;
  std::optional<std::uint64_t> seed;
};

void add_common(CLI::App* sub, CommonFlags& f) {
  sub->add_option("--config", f.config, "JSON experiment config; explicit flags override its values");
  sub->add_option("--regime", f.regime, "Regime tag P1..P6");
  sub->add_option("--rho", f.rho, "Autoregressive coefficient (P1, P2)");
  sub->add_option("--c", f.c, "Local-to-unity constant (P4, P5, P6)");
  sub->add_option("--alpha", f.alpha, "Moderate-deviation exponent in (0, 1) (P5, P6)");
  sub->add_option("--model", f.model, "Innovation model: gaussian, uniform, rademacher, pareto2");
  sub->add_option("--sigma", f.sigma, "Scale for gaussian/uniform models");
  sub->add_option("--mu", f.mu, "Intercept");
  sub->add_option("--y0", f.y0, "Initial value");
  sub->add_option("--seed", f.seed, "Master seed (default 20240601)");
}

ExperimentConfig resolve_config(const CommonFlags& f) {
  ExperimentConfig config;
  nlohmann::json file;
  if (!f.config.empty()) {
    file = read_json_file(f.config);
    config = experiment_from_json(file);
  }
  if (f.regime || f.rho || f.c || f.alpha) {
    const RegimeSpec& base = config.regime;
    const Regime tag = f.regime ? parse_regime(*f.regime) : base.tag();
    const bool same_tag = tag == base.tag();
    const double rho = f.rho.value_or(same_tag ? base.rho() : 0.0);
    const double c = f.c.value_or(same_tag ? base.c() : 0.0);
    const double alpha = f.alpha.value_or(same_tag ? base.alpha() : 0.0);
    config.regime = RegimeSpec::make(tag, rho, c, alpha);
  }
  if (f.model || f.sigma) {
    std::string id = f.model.value_or(config.model.id());
    double sigma = 1.0;
    if (const auto* g = std::get_if<GaussianKind>(&config.model.kind())) sigma = g->sigma;
    if (const auto* u = std::get_if<UniformKind>(&config.model.kind())) sigma = u->sigma;
    config.model = make_model(id, f.sigma.value_or(sigma));
  }
  if (f.mu) config.mu = *f.mu;
  if (f.y0) config.y0 = *f.y0;
  config.seed = f.seed.value_or(f.config.empty() || !file.contains("seed") ? kDefaultSeed : config.seed);
  return config;
}

std::vector<std::size_t> parse_n_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t used = 0;
      const long long value = std::stoll(item, &used);
      if (used != item.size() || value <= 0) throw std::invalid_argument(item);
      out.push_back(static_cast<std::size_t>(value));
    } catch (const std::exception&) {
      throw UsageError("--n-list: '" + item + "' is not a positive integer");
    }
  }
  if (out.empty()) throw UsageError("--n-list must not be empty");
  return out;
}

void write_or_print(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

void emit_report(const McReport& report, const McCommand& command, std::ostream& out) {
  print_summary_table(out, report);
  if (!command.out.empty()) write_text_file(command.out, report_to_json(report).dump(2) + "\n");
  if (!command.csv.empty()) {
    std::ostringstream csv;
    write_replication_csv(csv, report.replications);
    write_text_file(command.csv, csv.str());
  }
  if (!command.limit_csv.empty()) {
    std::ostringstream csv;
    write_limit_csv(csv, report.limit_comp1, report.limit_comp2);
    write_text_file(command.limit_csv, csv.str());
  }
}

}  // namespace

int theorem_for(Regime regime) {
  switch (regime) {
    case Regime::P1: return 1;
    case Regime::P2: return 2;
    case Regime::P3:
    case Regime::P4: return 3;
    case Regime::P5:
    case Regime::P6: return 4;
  }
  return 0;
}

CliCommand parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Least squares limit theory for AR(1) with intercept: simulation and Monte Carlo checks", "arlim"};
  app.require_subcommand(1, 1);

  CommonFlags sim_flags, limit_flags, mc_flags, rates_flags;
  std::size_t sim_n = 100;
  std::string sim_out, est_in, limit_out, mc_out, mc_csv, mc_limit_csv, rates_out;
  bool est_json = false;
  std::optional<std::size_t> draws, grid_m, truncation, mc_reps, rates_reps, mc_draws, mc_grid, mc_trunc;
  std::optional<int> theorem;
  std::optional<std::string> mc_n_list, rates_n_list;
  unsigned mc_workers = 1, rates_workers = 1;

  auto* simulate = app.add_subcommand("simulate", "Simulate one AR(1) path and write t,y,e CSV");
  add_common(simulate, sim_flags);
  simulate->add_option("--n", sim_n, "Sample size (>= 2)");
  simulate->add_option("--out", sim_out, "Output CSV (default stdout)");

  auto* estimate = app.add_subcommand("estimate", "Least squares fit of a path CSV");
  estimate->add_option("--in", est_in, "Path CSV with header t,y,e")->required();
  estimate->add_flag("--json", est_json, "Print the estimate as JSON");

  auto* limit = app.add_subcommand("limit-sample", "Draw from the limit law of the regime's theorem");
  add_common(limit, limit_flags);
  limit->add_option("--theorem", theorem, "Expected theorem number (1-4); must match the regime");
  limit->add_option("--draws", draws, "Number of draws L");
  limit->add_option("--grid-m", grid_m, "Brownian grid size for P3/P4 limits");
  limit->add_option("--truncation", truncation, "Series truncation M for the P2 limit (0 = automatic)");
  limit->add_option("--out", limit_out, "Output CSV (default stdout)");

  auto* mc = app.add_subcommand("mc", "Full Monte Carlo experiment with diagnostics");
  add_common(mc, mc_flags);
  mc->add_option("--n-list", mc_n_list, "Comma-separated sample sizes");
  mc->add_option("--replications", mc_reps, "Replications R per sample size");
  mc->add_option("--draws", mc_draws, "Limit-law draws L");
  mc->add_option("--grid-m", mc_grid, "Brownian grid size for P3/P4 limits");
  mc->add_option("--truncation", mc_trunc, "Series truncation M for the P2 limit (0 = automatic)");
  mc->add_option("--workers", mc_workers, "Worker threads");
  mc->add_option("--out", mc_out, "JSON report path");
  mc->add_option("--csv", mc_csv, "Replication CSV path");
  mc->add_option("--limit-csv", mc_limit_csv, "Limit-law sample CSV path");

  auto* rates = app.add_subcommand("rates", "Fit log RMSE on log n over an n_list sweep");
  add_common(rates, rates_flags);
  rates->add_option("--n-list", rates_n_list, "Comma-separated sample sizes (at least 3)");
  rates->add_option("--replications", rates_reps, "Replications R per sample size");
  rates->add_option("--workers", rates_workers, "Worker threads");
  rates->add_option("--out", rates_out, "JSON output path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw UsageError(std::string(e.what()) + "\n\n" + app.help());
  }

  try {
    if (simulate->parsed()) {
      if (sim_n < 2) throw UsageError("--n must be >= 2");
      return SimulateCommand{resolve_config(sim_flags), sim_n, sim_out};
    }
    if (estimate->parsed()) return EstimateCommand{est_in, est_json};
    if (limit->parsed()) {
      LimitSampleCommand command{resolve_config(limit_flags), theorem, limit_out};
      if (draws) command.config.limit_draws = *draws;
      if (grid_m) command.config.grid_m = *grid_m;
      if (truncation) command.config.truncation = *truncation;
      if (theorem && *theorem != theorem_for(command.config.regime.tag())) {
        throw UsageError("--theorem " + std::to_string(*theorem) + " does not match regime " +
                         to_string(command.config.regime.tag()));
      }
      LimitParams params{command.config.regime, command.config.mu, command.config.y0,
                         command.config.model.variance_class()};
      check_limit_params(params, {command.config.grid_m, command.config.truncation});
      return command;
    }
    if (mc->parsed()) {
      McCommand command{resolve_config(mc_flags), mc_out, mc_csv, mc_limit_csv, std::max(1u, mc_workers)};
      if (mc_n_list) command.config.n_list = parse_n_list(*mc_n_list);
      if (mc_reps) command.config.replications = *mc_reps;
      if (mc_draws) command.config.limit_draws = *mc_draws;
      if (mc_grid) command.config.grid_m = *mc_grid;
      if (mc_trunc) command.config.truncation = *mc_trunc;
      validate(command.config);
      return command;
    }
    RatesCommand command{resolve_config(rates_flags), rates_out, std::max(1u, rates_workers)};
    if (rates_n_list) command.config.n_list = parse_n_list(*rates_n_list);
    if (rates_reps) command.config.replications = *rates_reps;
    if (command.config.n_list.size() < 3) throw UsageError("rates needs at least 3 sample sizes");
    validate(command.config);
    return command;
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

void execute(const CliCommand& command, std::ostream& out) {
  if (const auto* sim = std::get_if<SimulateCommand>(&command)) {
    const ExperimentConfig& c = sim->config;
    const Ar1Path path = simulate_path(c.regime, c.mu, c.y0, c.model, sim->n, c.seed);
    std::ostringstream csv;
    write_path_csv(csv, path);
    write_or_print(sim->out, csv.str(), out);
    return;
  }
  if (const auto* est = std::get_if<EstimateCommand>(&command)) {
    std::ifstream in(est->in);
    if (!in) throw Error("cannot open path CSV '" + est->in + "'");
    const Ar1Path path = path_from_data(read_path_csv(in));
    const LsEstimate e = ls_estimate(path);
    if (est->json) {
      ojson j;
      j["n"] = path.n();
      j["mu_hat"] = format_real(e.mu_hat);
      j["rho_hat"] = format_real(e.rho_hat);
      j["delta3"] = format_real(e.delta3);
      if (!path.e.empty()) {
        j["delta1"] = format_real(e.delta1);
        j["delta2"] = format_real(e.delta2);
      }
      out << j.dump(2) << '\n';
    } else {
      out << "n       " << path.n() << '\n';
      out << "mu_hat  " << format_real(e.mu_hat) << '\n';
      out << "rho_hat " << format_real(e.rho_hat) << '\n';
      out << "delta3  " << format_real(e.delta3) << '\n';
      if (!path.e.empty()) {
        out << "delta1  " << format_real(e.delta1) << '\n';
        out << "delta2  " << format_real(e.delta2) << '\n';
      }
    }
    return;
  }
  if (const auto* lim = std::get_if<LimitSampleCommand>(&command)) {
    const ExperimentConfig& c = lim->config;
    const LimitSampler sampler(LimitParams{c.regime, c.mu, c.y0, c.model.variance_class()}, c.model,
                               LimitSamplerOptions{c.grid_m, c.truncation});
    std::vector<double> comp1(c.limit_draws), comp2(c.limit_draws);
    for (std::size_t i = 0; i < c.limit_draws; ++i) {
      Stream stream(limit_draw_seed(c.seed, i));
      std::tie(comp1[i], comp2[i]) = sampler(stream);
    }
    std::ostringstream csv;
    write_limit_csv(csv, comp1, comp2);
    write_or_print(lim->out, csv.str(), out);
    return;
  }
  if (const auto* mc = std::get_if<McCommand>(&command)) {
    emit_report(run_experiment(mc->config, RunOptions{mc->workers, true}), *mc, out);
    return;
  }
  const auto& rates = std::get<RatesCommand>(command);
  const McReport report = run_experiment(rates.config, RunOptions{rates.workers, false});
  char line[160];
  std::snprintf(line, sizeof line, "%8s %14s %14s %6s\n", "n", "rmse_mu", "rmse_rho", "sing");
  out << line;
  ojson j;
  j["config"] = experiment_to_json(rates.config);
  ojson rows = ojson::array();
  for (const SampleSizeReport& run : report.runs) {
    std::snprintf(line, sizeof line, "%8zu %14.6g %14.6g %6zu\n", run.n, run.rmse_mu.value_or(std::nan("")),
                  run.rmse_rho.value_or(std::nan("")), run.singular_count);
    out << line;
    ojson row;
    row["n"] = run.n;
    row["rmse_mu"] = run.rmse_mu ? ojson(*run.rmse_mu) : ojson(nullptr);
    row["rmse_rho"] = run.rmse_rho ? ojson(*run.rmse_rho) : ojson(nullptr);
    row["singular"] = run.singular_count;
    rows.push_back(std::move(row));
  }
  j["runs"] = std::move(rows);
  j["trimmed"] = uses_trimmed_rmse(rates.config.regime.tag());
  if (report.slope_rho) {
    std::snprintf(line, sizeof line, "slope mu  %.4f (se %.4f)\nslope rho %.4f (se %.4f)\n", report.slope_mu->slope,
                  report.slope_mu->stderr_slope, report.slope_rho->slope, report.slope_rho->stderr_slope);
    out << line;
    j["slope_mu"] = {{"slope", report.slope_mu->slope}, {"stderr", report.slope_mu->stderr_slope}};
    j["slope_rho"] = {{"slope", report.slope_rho->slope}, {"stderr", report.slope_rho->stderr_slope}};
  } else {
    j["slope_mu"] = nullptr;
    j["slope_rho"] = nullptr;
  }
  if (!rates.out.empty()) write_text_file(rates.out, j.dump(2) + "\n");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliCommand command;
  try {
    command = parse_args(args);
  } catch (const HelpRequested& help) {
    out << help.what();
    return kExitOk;
  } catch (const UsageError& e) {
    err << "arlim: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    execute(command, out);
  } catch (const std::exception& e) {
    err << "arlim: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace arlim::cli
