#include <gtest/gtest.h>

#include <sstream>

#include "arlim/config.hpp"
#include "arlim/errors.hpp"
#include "arlim/estimator.hpp"
#include "arlim/io.hpp"

namespace arlim {
namespace {

TEST(Config, ParsesFullSchema) {
  const auto j = nlohmann::json::parse(R"({
    "regime": {"tag": "P5", "c": -1.0, "alpha": 0.5},
    "model": {"id": "uniform", "sigma": 2},
    "mu": 1.5, "y0": -1, "n_list": [100, 200], "replications": 300,
    "limit_draws": 5000, "seed": 9, "grid_m": 2000, "truncation_M": 0})");
  const ExperimentConfig c = experiment_from_json(j);
  EXPECT_EQ(c.regime.tag(), Regime::P5);
  EXPECT_EQ(c.regime.alpha(), 0.5);
  EXPECT_EQ(c.model.id(), "uniform");
  EXPECT_EQ(c.mu, 1.5);
  EXPECT_EQ(c.y0, -1);
  EXPECT_EQ(c.n_list, (std::vector<std::size_t>{100, 200}));
  EXPECT_EQ(c.replications, 300u);
  EXPECT_EQ(c.limit_draws, 5000u);
  EXPECT_EQ(c.seed, 9u);
  EXPECT_EQ(c.grid_m, 2000u);
  EXPECT_EQ(experiment_from_json(experiment_to_json(c)).regime.c(), -1.0);
  EXPECT_EQ(experiment_to_json(experiment_from_json(experiment_to_json(c))).dump(), experiment_to_json(c).dump());
}

TEST(Config, RejectsUnknownAndMisplacedKeys) {
  EXPECT_THROW(experiment_from_json(nlohmann::json::parse(R"({"mu": 1, "replication": 5})")), ConfigError);
  EXPECT_THROW(regime_from_json(nlohmann::json::parse(R"({"tag": "P1", "rho": 0.5, "c": 1})")), ConfigError);
  EXPECT_THROW(regime_from_json(nlohmann::json::parse(R"({"tag": "P9"})")), ConfigError);
  EXPECT_THROW(regime_from_json(nlohmann::json::parse(R"({"tag": "P1", "rho": 1.5})")), ConfigError);
  EXPECT_THROW(model_from_json(nlohmann::json::parse(R"({"id": "cauchy"})")), ConfigError);
  EXPECT_THROW(model_from_json(nlohmann::json::parse(R"({"id": "gaussian", "scale": 1})")), ConfigError);
  EXPECT_THROW(experiment_from_json(nlohmann::json::parse(R"({"mu": "one"})")), ConfigError);
}

TEST(Config, MissingFileNamed) {
  try {
    read_json_file("/nonexistent/exp.json");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/exp.json"), std::string::npos);
  }
}

TEST(PathCsv, RoundTripFullPrecision) {
  const Ar1Path p = simulate_path(RegimeSpec::moderate_deviation(1, 0.5), 1.0, 0.25, InnovationModel::gaussian(),
                                  300, 4);
  std::stringstream csv;
  write_path_csv(csv, p);
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header, "t,y,e");
  csv.seekg(0);
  const PathData d = read_path_csv(csv);
  ASSERT_EQ(d.levels.size(), 301u);
  EXPECT_EQ(d.levels[0], p.y0);
  for (std::size_t t = 0; t < p.y.size(); ++t) ASSERT_EQ(d.levels[t + 1], p.y[t]);
  EXPECT_EQ(d.e, p.e);
  const LsEstimate a = ls_estimate(p), b = ls_estimate(path_from_data(d));
  EXPECT_EQ(a.mu_hat, b.mu_hat);
  EXPECT_EQ(a.rho_hat, b.rho_hat);
}

TEST(PathCsv, RejectsMalformed) {
  std::stringstream bad_header("t,x,e\n0,1,\n");
  EXPECT_THROW(read_path_csv(bad_header), Error);
  std::stringstream bad_value("t,y,e\n0,1,\n1,abc,0.5\n");
  EXPECT_THROW(read_path_csv(bad_value), Error);
}

TEST(ReplicationCsv, HeaderAndSingularRows) {
  std::vector<Replication> reps(2);
  reps[0] = {100, 0, false, 1.0, 0.5, 0, 0, 0.25, -0.125};
  reps[1] = {100, 1, true};
  std::stringstream out;
  write_replication_csv(out, reps);
  EXPECT_EQ(out.str(), "n,r,mu_hat,rho_hat,scaled_mu,scaled_rho,singular\n100,0,1,0.5,0.25,-0.125,0\n100,1,,,,,1\n");
}

TEST(LimitCsv, Header) {
  std::stringstream out;
  write_limit_csv(out, std::vector<double>{0.1}, std::vector<double>{-2});
  EXPECT_EQ(out.str(), "draw,comp1,comp2\n0,0.1,-2\n");
}

TEST(FormatReal, ShortestRoundTrip) {
  EXPECT_EQ(format_real(Real(0.5)), "0.5");
  const Real third = Real(1) / 3;
  EXPECT_EQ(parse_real(format_real(third)), third);
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_THROW(parse_real("1.0x"), DomainError);
}

}  // namespace
}  // namespace arlim
