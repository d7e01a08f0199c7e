#pragma once

// One-dimensional MCMC action samplers.

#include <functional>
#include <vector>

#include "mebandit/rng.hpp"

namespace mebandit {

using ScalarFunction = std::function<double(double)>;

struct HMCConfig {
  double initial_state = 2.5;
  double step_size = 1.0;
  int leapfrog_steps = 3;
  int burn_in = 100;
  int samples_to_draw = 1;

  void validate() const;  // throws ConfigError
};

struct HMCResult {
  std::vector<double> samples;  // post-burn-in states, one per transition
  int proposals = 0;
  int accepted = 0;

  bool all_rejected() const { return accepted == 0; }
  double acceptance_rate() const {
    return proposals == 0 ? 0.0 : static_cast<double>(accepted) / proposals;
  }
};

// Unit-mass HMC with leapfrog integration and a Metropolis correction. Runs
// `burn_in` transitions, then `samples_to_draw` more, recording each.
// Throws SamplerError if the log-density is not finite at the initial state.
HMCResult hmc_chain(const ScalarFunction& log_density, const ScalarFunction& grad_log_density,
                    const HMCConfig& config, Rng& rng);

// Last state of hmc_chain.
double hmc_sample(const ScalarFunction& log_density, const ScalarFunction& grad_log_density,
                  const HMCConfig& config, Rng& rng);

struct SGLDConfig {
  int steps = 100;           // K
  double step_size = 0.2;    // eta
  double noise_sigma = 0.005;
  double init_low = 0.5;
  double init_high = 5.5;

  void validate() const;  // throws ConfigError
};

// x0 ~ U(init_low, init_high); x_k = x_{k-1} - eta * grad(x_{k-1}) + N(0, sigma).
// No clamping along the chain. Throws SamplerError carrying the last finite
// state if the gradient turns non-finite.
double sgld_chain(const ScalarFunction& grad_energy, const SGLDConfig& config, Rng& rng);

}  // namespace mebandit
