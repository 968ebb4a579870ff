#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "arlim/innovations.hpp"
#include "arlim/montecarlo.hpp"
#include "arlim/process.hpp"

namespace arlim {

/// {"tag": "P5", "c": -1.0, "alpha": 0.5}; keys not used by the tag are rejected.
RegimeSpec regime_from_json(const nlohmann::json& j);
nlohmann::ordered_json regime_to_json(const RegimeSpec& regime);

/// {"id": "gaussian", "sigma": 1.0}; ids: gaussian, uniform, rademacher, pareto2.
InnovationModel model_from_json(const nlohmann::json& j);
InnovationModel make_model(const std::string& id, double sigma);
nlohmann::ordered_json model_to_json(const InnovationModel& model);

/// Parses the experiment schema; unknown keys raise ConfigError. Missing keys
/// keep the ExperimentConfig defaults.
ExperimentConfig experiment_from_json(const nlohmann::json& j);
nlohmann::ordered_json experiment_to_json(const ExperimentConfig& config);

/// Reads and parses a config file. ConfigError names the file on failure.
nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace arlim
