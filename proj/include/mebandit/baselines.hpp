#pragma once

// Classical comparison policies over a discrete action grid: UCB1 and
// Beta-Bernoulli Thompson sampling (context-free), and disjoint per-arm
// linUCB and linear Thompson sampling.

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "mebandit/policy.hpp"

namespace mebandit {

struct ArmStats {
  std::vector<std::int64_t> counts;
  std::vector<double> rewards;  // cumulative per arm
  std::int64_t total = 0;

  explicit ArmStats(std::size_t arms = 0) : counts(arms, 0), rewards(arms, 0.0) {}
  void update(std::size_t arm, double reward);
  double mean(std::size_t arm) const;
};

// Unpulled arms first (lowest index); then argmax mean + sqrt(2 ln n / n_a),
// ties to the lowest index.
std::size_t ucb1_select(const ArmStats& stats);

struct BetaArm {
  double alpha = 1.0;
  double beta = 1.0;

  void update(int reward) { (reward != 0 ? alpha : beta) += 1.0; }
  double mean() const { return alpha / (alpha + beta); }
};

double sample_beta(double alpha, double beta, Rng& rng);
std::size_t ts_select(std::span<const BetaArm> arms, Rng& rng);

class LinearArm {
 public:
  explicit LinearArm(int dim);

  // A += x x^T, b += r x.
  void update(const Eigen::VectorXd& x, double reward);
  Eigen::VectorXd theta() const;         // A^-1 b
  Eigen::MatrixXd covariance() const;    // A^-1

  const Eigen::MatrixXd& design() const { return a_; }
  const Eigen::VectorXd& response() const { return b_; }

 private:
  Eigen::MatrixXd a_;
  Eigen::VectorXd b_;
};

// theta^T x + alpha * sqrt(x^T A^-1 x), argmax with lowest-index ties.
std::size_t linucb_select(std::span<const LinearArm> arms, const Eigen::VectorXd& x, double alpha);
double linucb_score(const LinearArm& arm, const Eigen::VectorXd& x, double alpha);

// theta~ ~ N(theta, v^2 A^-1) per arm, argmax theta~^T x. Throws
// InstabilityError if the covariance has no Cholesky factor.
std::size_t lints_select(std::span<const LinearArm> arms, const Eigen::VectorXd& x, double v,
                         Rng& rng);

enum class BaselineKind { ucb1, ts, linucb, lints };

struct BaselineConfig {
  std::vector<double> action_set{0.2, 1.2, 2.2, 3.2, 4.2, 5.2};
  double linucb_alpha = 0.05;
  double lints_v = 1.0;
  bool append_bias = false;  // linear models: add a constant 1 feature
  int warmup_steps = 0;      // uniform arm choice before learning

  void validate() const;  // throws ConfigError
};

class BaselinePolicy final : public Policy {
 public:
  BaselinePolicy(BaselineKind kind, int context_dim, BaselineConfig config, std::uint64_t seed);

  double select_action(std::span<const double> context, std::int64_t step) override;
  void observe(const Triplet& triplet) override;
  std::string name() const override;

  const ArmStats& arm_stats() const { return stats_; }
  const std::vector<BetaArm>& beta_arms() const { return beta_; }
  const std::vector<LinearArm>& linear_arms() const { return linear_; }

 private:
  Eigen::VectorXd features(std::span<const double> context) const;
  std::size_t arm_of(double action) const;

  BaselineKind kind_;
  BaselineConfig config_;
  Rng rng_;
  ArmStats stats_;
  std::vector<BetaArm> beta_;
  std::vector<LinearArm> linear_;
};

}  // namespace mebandit
