#pragma once

// Experiment orchestration: policy construction, the interaction loop,
// regret accounting and multi-run aggregation.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mebandit/baselines.hpp"
#include "mebandit/environment.hpp"
#include "mebandit/policy.hpp"
#include "mebandit/policy_ebm.hpp"
#include "mebandit/policy_maxent.hpp"

namespace mebandit {

enum class Algorithm { ebm, nn_hmc, nn_discrete, ucb1, ts, linucb, lints };

inline constexpr std::array<Algorithm, 7> kAllAlgorithms{
    Algorithm::ebm,  Algorithm::nn_hmc, Algorithm::nn_discrete, Algorithm::ucb1,
    Algorithm::ts,   Algorithm::linucb, Algorithm::lints};

std::string_view algorithm_name(Algorithm algorithm);
std::optional<Algorithm> parse_algorithm(std::string_view name);
bool uses_warmup(Algorithm algorithm);

struct Hyperparameters {
  MaxEntConfig nn_discrete = MaxEntConfig::discrete_defaults();
  MaxEntConfig nn_hmc = MaxEntConfig::hmc_defaults();
  HMCConfig hmc;
  EBMConfig ebm;
  BaselineConfig baseline;
};

struct RunConfig {
  Algorithm algorithm = Algorithm::ebm;
  EnvSpec environment = make_env_spec(ContextKind::linear_blobs, false);
  std::int64_t horizon = 10000;
  std::uint64_t seed = 0;
  Hyperparameters hyper;

  void validate() const;  // throws ConfigError
};

// Policy for `config.algorithm`, seeded from the run's "policy" substream.
std::unique_ptr<Policy> make_policy(const RunConfig& config, int context_dim);

struct RunTrace {
  std::string algorithm;
  std::string environment;
  std::uint64_t seed = 0;
  std::string config_hash;
  int context_dim = 0;
  std::vector<StepOutcome> steps;
  std::vector<double> cumulative;  // cumulative regret after each step
  bool valid = true;
  std::string error;
  std::vector<std::string> incidents;
  double wall_seconds = 0.0;

  double final_regret() const { return cumulative.empty() ? 0.0 : cumulative.back(); }
};

// Runs the configured policy for config.horizon steps. Policy instability
// that the policy cannot recover from ends the run early with
// valid == false and the partial trace kept.
RunTrace run_episode(const RunConfig& config);
// Same loop with a caller-supplied policy (the algorithm tag is ignored).
RunTrace run_episode(const RunConfig& config, Policy& policy);

// Prefix sums of optimal_reward - reward.
std::vector<double> cumulative_regret(std::span<const StepOutcome> steps);

// Shannon entropy in nats.
double policy_entropy(std::span<const double> probabilities);

struct CellStats {
  double mean = 0.0;
  double std = 0.0;  // population standard deviation
  double best = 0.0;
  int runs = 0;
  int invalid = 0;

  bool missing() const { return runs == 0; }
};

CellStats aggregate(std::span<const double> final_regrets, int invalid_runs = 0);
// Invalid traces are counted but excluded.
CellStats aggregate(std::span<const RunTrace> traces);

}  // namespace mebandit
