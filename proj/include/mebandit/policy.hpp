#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mebandit/rng.hpp"

namespace mebandit {

// One interaction record.
struct Triplet {
  std::vector<double> state;
  double action = 0.0;
  int reward = 0;
  std::int64_t step = 0;
};

// Uniform random exploration before a learned policy has data.
struct Warmup {
  int steps = 1000;
  double low = 0.5;
  double high = 5.5;

  bool active(std::int64_t step) const { return step < steps; }
  double draw(Rng& rng) const { return uniform(rng, low, high); }
  void validate() const;  // throws ConfigError
};

// A contextual bandit policy. One instance per run, used single-threaded.
// observe() appends the triplet and runs any scheduled training; it throws
// InstabilityError only when the policy could not recover.
class Policy {
 public:
  virtual ~Policy() = default;

  virtual double select_action(std::span<const double> context, std::int64_t step) = 0;
  virtual void observe(const Triplet& triplet) = 0;
  virtual std::string name() const = 0;

  // Recoverable incidents (restarts, refits) for the run log.
  const std::vector<std::string>& incidents() const { return incidents_; }

 protected:
  void record_incident(std::string message) { incidents_.push_back(std::move(message)); }

 private:
  std::vector<std::string> incidents_;
};

}  // namespace mebandit
