#pragma once

// Maximum-entropy policies over a neural reward estimator r(a, s): an exact
// softmax over a discrete action grid, and HMC sampling of
// exp(r(a, s) / alpha) restricted to [a_lower, a_upper].

#include <cstdint>
#include <span>
#include <vector>

#include "mebandit/nn_core.hpp"
#include "mebandit/policy.hpp"
#include "mebandit/samplers.hpp"

namespace mebandit {

enum class RewardLoss { bce, mse };

struct MaxEntConfig {
  double alpha = 0.1;
  int train_period = 100;
  int epochs = 10;
  int batch_size = 2;
  double learning_rate = 1e-3;
  std::vector<int> hidden_layers{50, 50};
  RewardLoss loss = RewardLoss::bce;
  std::vector<double> action_set{0.2, 1.2, 2.2, 3.2, 4.2, 5.2};
  double a_lower = 0.5;
  double a_upper = 5.5;
  Warmup warmup;

  static MaxEntConfig discrete_defaults();
  static MaxEntConfig hmc_defaults();

  void validate(bool discrete) const;  // throws ConfigError
};

// Log-density returned outside the action bounds.
inline constexpr double kOutOfBoundsLogDensity = -1e10;

class RewardEstimator {
 public:
  RewardEstimator(int context_dim, const MaxEntConfig& config, Rng& init_rng);
  RewardEstimator(nn::MLPParams params, double learning_rate);

  // r(action, state); the network input is (action, state...).
  double predict(double action, std::span<const double> state) const;
  // r(a_k, state) for every action, in one batched pass.
  std::vector<double> predict_many(std::span<const double> actions,
                                   std::span<const double> state) const;
  // d r / d action.
  double action_gradient(double action, std::span<const double> state) const;

  int context_dim() const { return params_.spec.input_dim() - 1; }
  const nn::MLPParams& params() const { return params_; }
  nn::MLPParams& params() { return params_; }
  nn::AdamState& adam() { return adam_; }

 private:
  nn::MLPParams params_;
  nn::AdamState adam_;
};

std::vector<double> softmax(std::span<const double> values, double alpha);

// Throws ConfigError for an empty action set.
std::vector<double> discrete_policy_probs(const RewardEstimator& estimator,
                                          std::span<const double> state,
                                          const MaxEntConfig& config);

// Inverse-CDF draw. Throws ContractViolation unless probabilities sum to 1
// within 1e-9 and are non-negative.
std::size_t sample_discrete_index(std::span<const double> probabilities, Rng& rng);
double sample_discrete_action(std::span<const double> probabilities,
                              std::span<const double> actions, Rng& rng);

double constrained_log_density(const RewardEstimator& estimator, std::span<const double> state,
                               double action, const MaxEntConfig& config);
double constrained_log_density_grad(const RewardEstimator& estimator,
                                    std::span<const double> state, double action,
                                    const MaxEntConfig& config);

double hmc_action(const RewardEstimator& estimator, std::span<const double> state,
                  const MaxEntConfig& config, const HMCConfig& hmc, Rng& rng);

struct FitReport {
  int adam_steps = 0;
  double final_epoch_loss = 0.0;
};

// epochs x ceil(n / batch) Adam steps over shuffled (action, state) -> reward
// pairs, continuing from the current parameters. Throws ContractViolation on
// an empty dataset and InstabilityError on a non-finite loss.
FitReport fit_estimator(RewardEstimator& estimator, std::span<const Triplet> dataset,
                        const MaxEntConfig& config, Rng& rng);

enum class MaxEntVariant { discrete, hmc };

class MaxEntPolicy final : public Policy {
 public:
  MaxEntPolicy(MaxEntVariant variant, int context_dim, MaxEntConfig config, HMCConfig hmc,
               std::uint64_t seed);

  double select_action(std::span<const double> context, std::int64_t step) override;
  void observe(const Triplet& triplet) override;
  std::string name() const override;

  const RewardEstimator& estimator() const { return estimator_; }
  const std::vector<Triplet>& dataset() const { return dataset_; }
  int fits() const { return fits_; }

 private:
  MaxEntVariant variant_;
  MaxEntConfig config_;
  HMCConfig hmc_;
  Rng init_rng_;
  Rng train_rng_;
  Rng action_rng_;
  RewardEstimator estimator_;
  std::vector<Triplet> dataset_;
  int fits_ = 0;
};

}  // namespace mebandit
