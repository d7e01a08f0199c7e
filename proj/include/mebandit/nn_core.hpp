#pragma once

// Small fixed-graph multilayer perceptron: batched forward pass, exact
// reverse-mode parameter and input gradients, inverted dropout, Adam, and
// the two scalar losses the policies train with.
//
// Samples are stored column-wise: a batch of B inputs of dimension d is a
// d x B matrix, and the scalar network output is a 1 x B row.

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "mebandit/rng.hpp"

namespace mebandit::nn {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using RowVector = Eigen::RowVectorXd;

enum class Activation { relu, sigmoid, linear };

enum class Mode { train, eval };

struct MLPSpec {
  std::vector<int> layer_sizes;         // input dim first, 1 last
  std::vector<Activation> activations;  // one per weight layer
  double dropout_rate = 0.0;            // internal layers, train mode only

  // Hidden layers share one activation; the last layer gets `output`.
  static MLPSpec make(std::vector<int> sizes, Activation hidden, Activation output,
                      double dropout_rate = 0.0);

  void validate() const;  // throws ConfigError
  int input_dim() const { return layer_sizes.front(); }
  std::size_t weight_layers() const { return layer_sizes.size() - 1; }
};

struct MLPParams {
  MLPSpec spec;
  std::vector<Matrix> weights;  // weights[l]: out_l x in_l
  std::vector<Vector> biases;   // biases[l]: out_l

  // Every weight and bias zero. Used as a deterministic test fixture.
  static MLPParams zeros(const MLPSpec& spec);

  bool all_finite() const;
  std::size_t parameter_count() const;
};

// Gradient set laid out exactly like MLPParams.
struct MLPGrads {
  std::vector<Matrix> weights;
  std::vector<Vector> biases;

  static MLPGrads zeros_like(const MLPParams& params);
  void set_zero();
  bool all_finite() const;
  double squared_norm() const;
};

// Everything the backward pass needs from a forward pass.
struct ForwardCache {
  std::vector<Matrix> inputs;   // inputs[l]: what layer l consumed (after dropout)
  std::vector<Matrix> outputs;  // outputs[l]: activation output of layer l
  std::vector<Matrix> masks;    // masks[l]: scaled keep-mask applied after layer l
  bool dropout_applied = false;

  Eigen::Index batch_size() const { return inputs.empty() ? 0 : inputs.front().cols(); }
};

struct ForwardResult {
  double output = 0.0;
  ForwardCache cache;
};

// Glorot-uniform weights, zero biases. Throws ConfigError on an invalid spec.
MLPParams mlp_init(const MLPSpec& spec, Rng& rng);

// Batched forward pass; returns the 1 x B output row (a view into `cache`).
// In train mode with a nonzero dropout rate, `rng` must be non-null.
const Matrix& mlp_forward_batch(const MLPParams& params, const Matrix& inputs, Mode mode,
                                Rng* rng, ForwardCache& cache);

ForwardResult mlp_forward(const MLPParams& params, std::span<const double> input, Mode mode,
                          Rng* rng = nullptr);

// Eval-mode scalar output without keeping the cache around.
double mlp_predict(const MLPParams& params, std::span<const double> input);

// Gradients of sum_b upstream[b] * output[b] with respect to every parameter,
// written into `grads` (resized as needed).
void mlp_param_grads_into(const MLPParams& params, const ForwardCache& cache,
                          const RowVector& upstream, MLPGrads& grads);

MLPGrads mlp_param_grads(const MLPParams& params, const ForwardCache& cache, double upstream);

// d(output)/d(input) at one input, eval mode.
Vector mlp_input_grad(const MLPParams& params, std::span<const double> input);

// Output and d(output)/d(input) for a network with a one-dimensional input,
// sharing one forward pass. This is the hot path of both samplers.
struct ScalarValueGrad {
  double value = 0.0;
  double grad = 0.0;
};
ScalarValueGrad mlp_value_and_input_grad_1d(const MLPParams& params, double input);

struct AdamState {
  MLPGrads first_moment;
  MLPGrads second_moment;
  std::int64_t step = 0;
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;

  static AdamState for_params(const MLPParams& params, double learning_rate);
};

// Bias-corrected Adam. Throws InstabilityError (leaving params and state
// untouched) if any gradient entry is non-finite.
void adam_step(MLPParams& params, const MLPGrads& grads, AdamState& state);

struct LossValue {
  double loss = 0.0;
  double grad = 0.0;  // d loss / d prediction
};

inline constexpr double kBceClamp = 1e-7;

LossValue bce_loss(double prediction, int label);
LossValue mse_loss(double prediction, double target);

}  // namespace mebandit::nn
