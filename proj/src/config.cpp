#include "arlim/config.hpp"

#include <fstream>
#include <set>
#include <string>

#include "arlim/errors.hpp"

namespace arlim {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!allowed.contains(key)) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

double number_at(const json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key)) throw ConfigError(where + " requires '" + key + "'");
  if (!j.at(key).is_number()) throw ConfigError(where + "." + key + " must be a number");
  return j.at(key).get<double>();
}

std::size_t count_at(const json& j, const std::string& key) {
  const json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) throw ConfigError("'" + key + "' must be a nonnegative integer");
  return v.get<std::size_t>();
}

}  // namespace

RegimeSpec regime_from_json(const json& j) {
  if (!j.is_object() || !j.contains("tag") || !j.at("tag").is_string()) {
    throw ConfigError("regime must be an object with a string 'tag'");
  }
  try {
    const Regime tag = parse_regime(j.at("tag").get<std::string>());
    switch (tag) {
      case Regime::P1:
      case Regime::P2:
        reject_unknown_keys(j, {"tag", "rho"}, "regime");
        return RegimeSpec::make(tag, number_at(j, "rho", "regime"), 0.0, 0.0);
      case Regime::P3:
        reject_unknown_keys(j, {"tag"}, "regime");
        return RegimeSpec::unit_root();
      case Regime::P4:
        reject_unknown_keys(j, {"tag", "c"}, "regime");
        return RegimeSpec::make(tag, 0.0, number_at(j, "c", "regime"), 0.0);
      case Regime::P5:
      case Regime::P6:
        reject_unknown_keys(j, {"tag", "c", "alpha"}, "regime");
        return RegimeSpec::make(tag, 0.0, number_at(j, "c", "regime"), number_at(j, "alpha", "regime"));
    }
  } catch (const DomainError& e) {
    throw ConfigError(std::string("regime: ") + e.what());
  }
  throw ConfigError("regime: unknown tag");
}

nlohmann::ordered_json regime_to_json(const RegimeSpec& regime) {
  nlohmann::ordered_json j;
  j["tag"] = to_string(regime.tag());
  switch (regime.tag()) {
    case Regime::P1:
    case Regime::P2: j["rho"] = regime.rho(); break;
    case Regime::P3: break;
    case Regime::P4: j["c"] = regime.c(); break;
    case Regime::P5:
    case Regime::P6:
      j["c"] = regime.c();
      j["alpha"] = regime.alpha();
      break;
  }
  return j;
}

InnovationModel make_model(const std::string& id, double sigma) {
  try {
    if (id == "gaussian") return InnovationModel::gaussian(sigma);
    if (id == "uniform") return InnovationModel::uniform(sigma);
    if (id == "rademacher") return InnovationModel::rademacher();
    if (id == "pareto2") return InnovationModel::pareto2();
  } catch (const DomainError& e) {
    throw ConfigError(std::string("model: ") + e.what());
  }
  throw ConfigError("unknown model id '" + id + "' (expected gaussian, uniform, rademacher, pareto2)");
}

InnovationModel model_from_json(const json& j) {
  if (!j.is_object() || !j.contains("id") || !j.at("id").is_string()) {
    throw ConfigError("model must be an object with a string 'id'");
  }
  const std::string id = j.at("id").get<std::string>();
  if (id == "gaussian" || id == "uniform") {
    reject_unknown_keys(j, {"id", "sigma"}, "model");
    return make_model(id, j.contains("sigma") ? number_at(j, "sigma", "model") : 1.0);
  }
  reject_unknown_keys(j, {"id"}, "model");
  return make_model(id, 1.0);
}

nlohmann::ordered_json model_to_json(const InnovationModel& model) {
  nlohmann::ordered_json j;
  j["id"] = model.id();
  if (const auto* g = std::get_if<GaussianKind>(&model.kind())) j["sigma"] = g->sigma;
  if (const auto* u = std::get_if<UniformKind>(&model.kind())) j["sigma"] = u->sigma;
  return j;
}

ExperimentConfig experiment_from_json(const json& j) {
  reject_unknown_keys(j,
                      {"regime", "model", "mu", "y0", "n_list", "replications", "limit_draws", "seed", "grid_m",
                       "truncation_M"},
                      "config");
  ExperimentConfig config;
  if (j.contains("regime")) config.regime = regime_from_json(j.at("regime"));
  if (j.contains("model")) config.model = model_from_json(j.at("model"));
  if (j.contains("mu")) config.mu = number_at(j, "mu", "config");
  if (j.contains("y0")) config.y0 = number_at(j, "y0", "config");
  if (j.contains("n_list")) {
    const json& list = j.at("n_list");
    if (!list.is_array()) throw ConfigError("'n_list' must be an array of integers");
    config.n_list.clear();
    for (const json& v : list) {
      if (!v.is_number_integer() || v.get<long long>() <= 0) throw ConfigError("'n_list' entries must be positive integers");
      config.n_list.push_back(v.get<std::size_t>());
    }
  }
  if (j.contains("replications")) config.replications = count_at(j, "replications");
  if (j.contains("limit_draws")) config.limit_draws = count_at(j, "limit_draws");
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) throw ConfigError("'seed' must be a nonnegative integer");
    config.seed = j.at("seed").get<std::uint64_t>();
  }
  if (j.contains("grid_m")) config.grid_m = count_at(j, "grid_m");
  if (j.contains("truncation_M")) config.truncation = count_at(j, "truncation_M");
  return config;
}

nlohmann::ordered_json experiment_to_json(const ExperimentConfig& config) {
  nlohmann::ordered_json j;
  j["regime"] = regime_to_json(config.regime);
  j["model"] = model_to_json(config.model);
  j["mu"] = config.mu;
  j["y0"] = config.y0;
  j["n_list"] = config.n_list;
  j["replications"] = config.replications;
  j["limit_draws"] = config.limit_draws;
  j["seed"] = config.seed;
  j["grid_m"] = config.grid_m;
  j["truncation_M"] = config.truncation;
  return j;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("invalid JSON in '" + path.string() + "': " + e.what());
  }
}

}  // namespace arlim
