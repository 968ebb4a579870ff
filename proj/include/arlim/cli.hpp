#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "arlim/errors.hpp"
#include "arlim/montecarlo.hpp"

namespace arlim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Usage or configuration problem; maps to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct SimulateCommand {
  ExperimentConfig config;  // regime, model, mu, y0, seed
  std::size_t n = 100;
  std::string out;  // empty writes to stdout
};

struct EstimateCommand {
  std::string in;
  bool json = false;
};

struct LimitSampleCommand {
  ExperimentConfig config;  // regime, model, mu, y0, limit_draws, seed, grid_m, truncation
  std::optional<int> theorem;
  std::string out;
};

struct McCommand {
  ExperimentConfig config;
  std::string out;
  std::string csv;
  std::string limit_csv;
  unsigned workers = 1;
};

struct RatesCommand {
  ExperimentConfig config;
  std::string out;
  unsigned workers = 1;
};

using CliCommand = std::variant<SimulateCommand, EstimateCommand, LimitSampleCommand, McCommand, RatesCommand>;

/// Parses one subcommand with its flags. Values from --config are overridden
/// by explicit flags. Throws UsageError; --help is reported as UsageError too
/// with the help text as its message and exit code 0 via run().
CliCommand parse_args(const std::vector<std::string>& args);

/// Executes a parsed command, writing artifacts and a summary to `out`.
void execute(const CliCommand& command, std::ostream& out);

/// Entry point shared by the executable and tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Which theorem's law applies to a regime (1..4).
int theorem_for(Regime regime);

}  // namespace arlim::cli
