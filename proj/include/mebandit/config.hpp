#pragma once

// JSON run and sweep configuration files.
//
// Run config: {"algorithm", "environment", "horizon", "seed",
// "hyperparameters"}. Every key is optional and falls back to the defaults
// in RunConfig; unknown keys at any level are a ConfigError.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mebandit/harness.hpp"

namespace mebandit {

RunConfig parse_run_config(const nlohmann::json& j);
RunConfig parse_run_config_text(std::string_view text);
// Throws IoError if the file cannot be read, ConfigError on bad content.
RunConfig load_run_config(const std::filesystem::path& path);

// Canonical, fully expanded form. parse_run_config(to_json(c)) reproduces c.
nlohmann::json to_json(const RunConfig& config);
nlohmann::json env_to_json(const EnvSpec& spec);
EnvSpec parse_env(const nlohmann::json& j);

// 16 hex digits over the canonical JSON with the seed removed, so every
// seed of one sweep cell shares a hash.
std::string config_hash(const RunConfig& config);

// Same keys as a run config, but "algorithm" and "environment" may also be
// lists; when absent the sweep covers all 7 algorithms and the 4 standard
// environments. Seeds are seed, seed + 1, ...
struct SweepConfig {
  std::vector<Algorithm> algorithms;
  std::vector<EnvSpec> environments;
  RunConfig base;

  // One RunConfig per (environment, algorithm, seed index).
  std::vector<RunConfig> expand(int seeds) const;
};

SweepConfig parse_sweep_config(const nlohmann::json& j);
SweepConfig load_sweep_config(const std::filesystem::path& path);

std::vector<EnvSpec> standard_environments();

}  // namespace mebandit
