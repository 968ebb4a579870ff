#include "arlim/io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "arlim/config.hpp"
#include "arlim/errors.hpp"

namespace arlim {

namespace {

using ojson = nlohmann::ordered_json;

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

ojson optional_number(const std::optional<double>& value) {
  return value ? ojson(*value) : ojson(nullptr);
}

ojson summary_to_json(const std::optional<Summary>& summary) {
  if (!summary) return nullptr;
  ojson j;
  j["count"] = summary->count;
  j["mean"] = summary->mean;
  j["variance"] = summary->variance;
  ojson q;
  const char* names[] = {"q05", "q25", "q50", "q75", "q95"};
  for (std::size_t i = 0; i < summary->quantiles.size(); ++i) q[names[i]] = summary->quantiles[i];
  j["quantiles"] = q;
  return j;
}

ojson slope_to_json(const std::optional<SlopeFit>& fit) {
  if (!fit) return nullptr;
  ojson j;
  j["slope"] = fit->slope;
  j["stderr"] = fit->stderr_slope;
  j["intercept"] = fit->intercept;
  return j;
}

}  // namespace

void write_path_csv(std::ostream& out, const Ar1Path& path) {
  out << kPathCsvHeader << '\n';
  out << "0," << format_real(path.y0) << ",\n";
  for (std::size_t t = 1; t <= path.n(); ++t) {
    out << t << ',' << format_real(path.y[t - 1]) << ',';
    if (path.e.size() == path.n()) out << format_double(path.e[t - 1]);
    out << '\n';
  }
}

PathData read_path_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || strip_cr(line) != kPathCsvHeader) {
    throw Error(std::string("path CSV must start with header '") + kPathCsvHeader + "'");
  }
  PathData data;
  bool all_e = true;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    line = strip_cr(line);
    ++row;
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() < 2 || fields.size() > 3) throw Error("path CSV row " + std::to_string(row) + ": expected t,y,e");
    if (std::stoul(fields[0]) != data.levels.size()) {
      throw Error("path CSV row " + std::to_string(row) + ": t out of sequence");
    }
    data.levels.push_back(parse_real(fields[1]));
    if (data.levels.size() > 1) {
      if (fields.size() == 3 && !fields[2].empty()) {
        data.e.push_back(static_cast<double>(parse_real(fields[2])));
      } else {
        all_e = false;
      }
    }
  }
  if (data.levels.size() < 3) throw Error("path CSV needs y0 and at least two observations");
  if (!all_e) data.e.clear();
  return data;
}

Ar1Path path_from_data(const PathData& data) {
  Ar1Path path;
  path.y0 = data.levels.front();
  path.y.assign(data.levels.begin() + 1, data.levels.end());
  path.e = data.e;
  return path;
}

void write_replication_csv(std::ostream& out, std::span<const Replication> replications) {
  out << kReplicationCsvHeader << '\n';
  for (const Replication& rep : replications) {
    out << rep.n << ',' << rep.r << ',';
    if (rep.singular) {
      out << ",,,,1\n";
      continue;
    }
    out << format_double(rep.mu_hat) << ',' << format_double(rep.rho_hat) << ',' << format_double(rep.scaled_mu)
        << ',' << format_double(rep.scaled_rho) << ",0\n";
  }
}

void write_limit_csv(std::ostream& out, std::span<const double> comp1, std::span<const double> comp2) {
  if (comp1.size() != comp2.size()) throw Error("limit CSV: component lengths differ");
  out << kLimitCsvHeader << '\n';
  for (std::size_t i = 0; i < comp1.size(); ++i) {
    out << i << ',' << format_double(comp1[i]) << ',' << format_double(comp2[i]) << '\n';
  }
}

ojson report_to_json(const McReport& report) {
  ojson j;
  j["config"] = experiment_to_json(report.config);
  ojson runs = ojson::array();
  for (const SampleSizeReport& run : report.runs) {
    ojson r;
    r["n"] = run.n;
    r["rho_n"] = run.rho_n;
    r["b_n"] = run.bn;
    r["l_b_n"] = run.l_bn;
    r["mu_rate"] = run.rates.mu_rate;
    r["rho_rate"] = run.rates.rho_rate;
    r["valid"] = run.scaled_mu.size();
    r["singular"] = run.singular_count;
    r["scaled_mu"] = summary_to_json(run.mu_summary);
    r["scaled_rho"] = summary_to_json(run.rho_summary);
    r["correlation"] = optional_number(run.correlation);
    r["ks_mu"] = optional_number(run.ks_mu);
    r["ks_rho"] = optional_number(run.ks_rho);
    r["rmse_mu"] = optional_number(run.rmse_mu);
    r["rmse_rho"] = optional_number(run.rmse_rho);
    runs.push_back(std::move(r));
  }
  j["runs"] = std::move(runs);
  if (report.limit_comp1_summary) {
    ojson limit;
    limit["draws"] = report.limit_comp1.size();
    limit["comp1"] = summary_to_json(report.limit_comp1_summary);
    limit["comp2"] = summary_to_json(report.limit_comp2_summary);
    limit["correlation"] = optional_number(report.limit_correlation);
    j["limit"] = std::move(limit);
  } else {
    j["limit"] = nullptr;
  }
  if (report.slope_mu) {
    ojson slopes;
    slopes["trimmed"] = uses_trimmed_rmse(report.config.regime.tag());
    slopes["mu"] = slope_to_json(report.slope_mu);
    slopes["rho"] = slope_to_json(report.slope_rho);
    j["rate_slope"] = std::move(slopes);
  } else {
    j["rate_slope"] = nullptr;
  }
  return j;
}

void print_summary_table(std::ostream& out, const McReport& report) {
  const auto cell = [](const std::optional<double>& v) {
    char buffer[32];
    if (v) {
      std::snprintf(buffer, sizeof buffer, "%11.4g", *v);
    } else {
      std::snprintf(buffer, sizeof buffer, "%11s", "-");
    }
    return std::string(buffer);
  };
  const auto variance = [](const std::optional<Summary>& s) {
    return s ? std::optional<double>(s->variance) : std::nullopt;
  };
  char line[256];
  std::snprintf(line, sizeof line, "%8s %6s %6s %11s %11s %11s %11s %11s %11s\n", "n", "valid", "sing", "var_mu",
                "var_rho", "corr", "ks_mu", "ks_rho", "rmse_rho");
  out << line;
  for (const SampleSizeReport& run : report.runs) {
    std::snprintf(line, sizeof line, "%8zu %6zu %6zu ", run.n, run.scaled_mu.size(), run.singular_count);
    out << line << cell(variance(run.mu_summary)) << ' ' << cell(variance(run.rho_summary)) << ' '
        << cell(run.correlation) << ' ' << cell(run.ks_mu) << ' ' << cell(run.ks_rho) << ' ' << cell(run.rmse_rho)
        << '\n';
  }
  if (report.limit_comp1_summary) {
    out << "limit law: var_comp1 = " << cell(report.limit_comp1_summary->variance)
        << ", var_comp2 = " << cell(report.limit_comp2_summary->variance)
        << ", corr = " << cell(report.limit_correlation) << '\n';
  }
  if (report.slope_rho) {
    char buffer[160];
    std::snprintf(buffer, sizeof buffer, "rate slope: mu %.4f (se %.4f), rho %.4f (se %.4f)\n", report.slope_mu->slope,
                  report.slope_mu->stderr_slope, report.slope_rho->slope, report.slope_rho->stderr_slope);
    out << buffer;
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out << text;
  out.flush();
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

}  // namespace arlim
