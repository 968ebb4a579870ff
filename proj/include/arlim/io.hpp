#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

#include <json.hpp>

#include "arlim/limit_laws.hpp"
#include "arlim/montecarlo.hpp"
#include "arlim/process.hpp"

namespace arlim {

inline constexpr const char* kPathCsvHeader = "t,y,e";
inline constexpr const char* kReplicationCsvHeader = "n,r,mu_hat,rho_hat,scaled_mu,scaled_rho,singular";
inline constexpr const char* kLimitCsvHeader = "draw,comp1,comp2";

/// Row t = 0 carries y0 with an empty e field.
void write_path_csv(std::ostream& out, const Ar1Path& path);

/// Levels y_0..y_n and, when every row t >= 1 has one, innovations e_1..e_n.
struct PathData {
  std::vector<Real> levels;
  std::vector<double> e;
};
PathData read_path_csv(std::istream& in);

/// Treats the data as a path with mu = rho = 0 truth placeholders.
Ar1Path path_from_data(const PathData& data);

void write_replication_csv(std::ostream& out, std::span<const Replication> replications);
void write_limit_csv(std::ostream& out, std::span<const double> comp1, std::span<const double> comp2);

nlohmann::ordered_json report_to_json(const McReport& report);

/// Fixed-width table of the per-n diagnostics.
void print_summary_table(std::ostream& out, const McReport& report);

/// Writes text to a file; throws Error on failure.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace arlim
