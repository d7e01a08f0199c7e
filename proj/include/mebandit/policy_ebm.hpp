#pragma once

// Energy-based contextual bandit policy.
//
// The energy of playing `a` in context `s` is E(a, s) = 0.5 * (f(a) - g(s))^2
// with two independent MLPs f and g. Training minimises the contrastive loss
// log(1 + exp(E(a+, s) - E(a-, s))) over pairs of rewarded / unrewarded
// actions, and actions are drawn with Langevin dynamics on E / alpha.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "mebandit/nn_core.hpp"
#include "mebandit/policy.hpp"
#include "mebandit/samplers.hpp"

namespace mebandit {

struct EBMConfig {
  std::vector<int> f_hidden{256, 256, 128};
  std::vector<int> g_hidden{128, 128, 128};
  double dropout_rate = 0.2;
  int train_period = 100;
  int epochs = 150;
  double learning_rate = 0.005;
  int batch_size = 128;
  double alpha = 10.0;
  SGLDConfig sgld;  // K = 100, eta = 0.2, sigma = 0.005, init U(0.5, 5.5)
  int restart_min = 10;
  int restart_max = 55;
  double restart_threshold = 0.6;
  // Variance of f over a 100-point action grid below which the model is
  // treated as collapsed.
  double collapse_variance = 1e-6;
  Warmup warmup;

  void validate() const;  // throws ConfigError
};

struct EnergyModel {
  nn::MLPParams f;  // action -> R
  nn::MLPParams g;  // context -> R
  nn::AdamState f_adam;
  nn::AdamState g_adam;

  static EnergyModel create(int context_dim, const EBMConfig& config, Rng& init_rng);
  // Wrap given networks (test fixtures); f must take a 1-D input.
  static EnergyModel from_networks(nn::MLPParams f, nn::MLPParams g, double learning_rate);

  int context_dim() const { return g.spec.input_dim(); }
};

double energy(const EnergyModel& model, double action, std::span<const double> state);
double energy_grad_action(const EnergyModel& model, double action, std::span<const double> state);

inline double softplus(double x) { return std::max(x, 0.0) + std::log1p(std::exp(-std::abs(x))); }

struct PairLoss {
  double loss = 0.0;
  nn::MLPGrads f_grads;
  nn::MLPGrads g_grads;
};

// Train-mode (dropout) loss and gradients for one (s, a+, a-) pair; both
// energies share the same g(s) evaluation.
PairLoss ebm_pair_loss(const EnergyModel& model, std::span<const double> state, double a_plus,
                       double a_minus, Rng& train_rng);

struct Pair {
  std::span<const double> state;  // points into the source dataset
  double positive = 0.0;
  double negative = 0.0;
};
using PairBatch = std::vector<Pair>;

// One pair per rewarded triplet, negative action drawn uniformly from the
// unrewarded triplets, order shuffled. nullopt when the dataset has no
// rewarded or no unrewarded triplet.
std::optional<PairBatch> build_pairs(std::span<const Triplet> dataset, Rng& rng);

struct TrainReport {
  bool trained = false;  // false: no usable pairs, model untouched
  int adam_steps = 0;
  std::vector<double> epoch_losses;
};

// config.epochs passes of Adam over freshly built pairs, warm-starting from
// the model's current weights. Throws InstabilityError on a non-finite loss
// or when the trained f has collapsed (see collapse_variance).
TrainReport train_ebm(EnergyModel& model, std::span<const Triplet> dataset,
                      const EBMConfig& config, Rng& rng);

// Variance of f over 100 evenly spaced actions in [low, high].
double action_response_variance(const EnergyModel& model, double low, double high);

// One SGLD chain on E(., state) / alpha.
double ebm_action(const EnergyModel& model, std::span<const double> state,
                  const EBMConfig& config, Rng& rng);

// Mean |sampled action - a+| over the rewarded triplets, one draw each.
double restart_score(const EnergyModel& model, std::span<const Triplet> positives,
                     const EBMConfig& config, Rng& rng);

template <class Candidate>
struct RestartSearchResult {
  Candidate best;
  double best_score = std::numeric_limits<double>::infinity();
  int best_attempt = -1;  // 0-based
  int evaluated = 0;
  std::vector<double> scores;
};

// Evaluate candidates 0, 1, ... up to max_attempts and keep the lowest score.
// Stops once at least min_attempts have been evaluated and the best score is
// below threshold.
template <class Candidate>
RestartSearchResult<Candidate> restart_search(
    int min_attempts, int max_attempts, double threshold,
    const std::function<std::pair<Candidate, double>(int attempt)>& make_candidate) {
  RestartSearchResult<Candidate> result;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    auto [candidate, score] = make_candidate(attempt);
    ++result.evaluated;
    result.scores.push_back(score);
    if (result.best_attempt < 0 || score < result.best_score) {
      result.best = std::move(candidate);
      result.best_score = score;
      result.best_attempt = attempt;
    }
    if (result.evaluated >= min_attempts && result.best_score < threshold) break;
  }
  return result;
}

// Initial fit: independently initialised candidates, each trained by
// train_ebm and scored by restart_score on the rewarded triplets of
// `dataset`. nullopt when the dataset has no rewarded triplet or no
// candidate could be trained.
std::optional<RestartSearchResult<EnergyModel>> first_fit_restart(
    std::span<const Triplet> dataset, int context_dim, const EBMConfig& config, Rng& init_rng,
    Rng& train_rng, Rng& sample_rng);

class EBMPolicy final : public Policy {
 public:
  EBMPolicy(int context_dim, EBMConfig config, std::uint64_t seed);

  double select_action(std::span<const double> context, std::int64_t step) override;
  void observe(const Triplet& triplet) override;
  std::string name() const override { return "ebm"; }

  bool fitted() const { return model_.has_value(); }
  const EnergyModel& model() const { return *model_; }
  const std::vector<Triplet>& dataset() const { return dataset_; }
  int fits() const { return fits_; }

 private:
  bool run_restart_search();

  int context_dim_;
  EBMConfig config_;
  Rng init_rng_;
  Rng train_rng_;
  Rng action_rng_;
  Rng restart_rng_;
  std::optional<EnergyModel> model_;
  std::vector<Triplet> dataset_;
  int fits_ = 0;
};

}  // namespace mebandit
