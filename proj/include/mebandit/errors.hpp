#pragma once

#include <stdexcept>
#include <string>

namespace mebandit {

// Invalid user-facing configuration (bad spec, bad JSON, out-of-range value).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke an operation's precondition (shape mismatch, bad distribution).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Training produced non-finite values or a degenerate model.
class InstabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// MCMC chain could not start or diverged. Carries the last finite state.
class SamplerError : public std::runtime_error {
 public:
  SamplerError(const std::string& what, double last_state)
      : std::runtime_error(what), last_state_(last_state) {}
  double last_state() const noexcept { return last_state_; }

 private:
  double last_state_;
};

// Environment used out of order (step without a pending context).
class ProtocolError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mebandit
