#pragma once

// Simulated contextual-bandit environments: clustered contexts, Gaussian-pdf
// Bernoulli rewards, and static or cosine-drifting optimal actions.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mebandit/rng.hpp"

namespace mebandit {

enum class ContextKind { linear_blobs, circles };

// stochastic: regret against a realized Bernoulli draw at the optimum.
// expected: regret against analytic success probabilities (diagnostic).
enum class RegretMode { stochastic, expected };

struct RewardFunctionSpec {
  double mu = 1.0;
  double variance = 0.6;
  bool dynamic = false;
};

struct ContextGenSpec {
  ContextKind kind = ContextKind::linear_blobs;
  double blob_std = 0.4;
  int blob_dim = 3;
  // One mean per cluster. Left empty in configs; filled by make_environment
  // from the layout substream.
  std::vector<std::vector<double>> blob_means;
  double blob_mean_range = 5.0;         // means ~ U(-range, range)^dim
  double blob_min_distance = 2.0;
  std::vector<double> circle_radii{4.0, 0.8};
  double circle_noise_std = 0.1;

  int context_dim() const { return kind == ContextKind::circles ? 2 : blob_dim; }
};

struct EnvSpec {
  std::vector<RewardFunctionSpec> rewards{{1.0, 0.6, false}, {4.0, 0.6, false}};
  ContextGenSpec contexts;
  RegretMode regret_mode = RegretMode::stochastic;

  int clusters() const { return static_cast<int>(rewards.size()); }
  bool dynamic() const;
  void set_dynamic(bool dynamic);
  void validate() const;  // throws ConfigError
};

// The four experiment settings plus their canonical names
// ("linear-static", "circle-dynamic", ...).
EnvSpec make_env_spec(ContextKind kind, bool dynamic);
std::string env_name(const EnvSpec& spec);

struct Context {
  std::vector<double> values;
  int cluster = 0;
};

// Cluster means in [-range, range]^dim with pairwise distance >= min_distance,
// redrawn until the constraint holds.
std::vector<std::vector<double>> draw_blob_means(int clusters, int dim, double range,
                                                 double min_distance, Rng& rng);

Context gen_context(const ContextGenSpec& spec, int clusters, Rng& rng);

double optimal_action(const RewardFunctionSpec& spec, std::int64_t step);
double success_probability(const RewardFunctionSpec& spec, double action, std::int64_t step);
double peak_success_probability(const RewardFunctionSpec& spec);
int draw_reward(const RewardFunctionSpec& spec, double action, std::int64_t step, Rng& rng);

struct StepOutcome {
  std::int64_t step = 0;
  std::vector<double> context;
  int cluster = 0;
  double action = 0.0;
  int observed_reward = 0;      // the bit the policy learns from
  double reward = 0.0;          // scored reward (== observed_reward in stochastic mode)
  double optimal_action = 0.0;
  double optimal_reward = 0.0;  // realized bit, or analytic peak in expected mode
};

class Environment {
 public:
  // `spec` must have blob means filled for linear blobs (see make_environment).
  Environment(EnvSpec spec, std::uint64_t context_seed, std::uint64_t reward_seed);

  const Context& next_context();
  // Throws ProtocolError when no context is pending.
  StepOutcome step(double action);

  const EnvSpec& spec() const { return spec_; }
  std::int64_t steps_taken() const { return step_; }
  int context_dim() const { return spec_.contexts.context_dim(); }

 private:
  EnvSpec spec_;
  Rng context_rng_;
  Rng reward_rng_;
  std::optional<Context> pending_;
  std::int64_t step_ = 0;
};

// Resolves random layout (blob means) from the master seed's substreams and
// builds the environment.
Environment make_environment(EnvSpec spec, std::uint64_t master_seed);

}  // namespace mebandit
