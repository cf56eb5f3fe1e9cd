// Copyright 2026 The neurofault Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "neurofault/nn/activation.hpp"

namespace neurofault::nn {

/// Dense layer. `weights` is row-major out_count x in_count: row i is the
/// fan-in of neuron i.
struct Layer {
  std::size_t in_count = 0;
  std::size_t out_count = 0;
  std::vector<float> weights;
  std::vector<float> biases;
  ActivationKind activation = ActivationKind::Relu;

  float weight(std::size_t neuron, std::size_t input) const {
    return weights[neuron * in_count + input];
  }
  std::span<const float> row(std::size_t neuron) const {
    return {weights.data() + neuron * in_count, in_count};
  }
};

/// Immutable feed-forward network. Construction validates:
///   * layer 0 in_count == input_dim and consecutive layers chain;
///   * weights/biases sizes match the declared counts;
///   * every value is finite;
///   * only the last layer may be softmax.
/// Violations throw Consistency (shape) or InvalidInput (non-finite).
class Network {
 public:
  Network(std::size_t input_dim, std::vector<Layer> layers);

  std::size_t input_dim() const noexcept { return input_dim_; }
  std::size_t output_dim() const noexcept { return layers_.back().out_count; }
  std::size_t layer_count() const noexcept { return layers_.size(); }
  const Layer& layer(std::size_t index) const { return layers_.at(index); }
  std::span<const Layer> layers() const noexcept { return layers_; }

  /// Column-major copy of a layer's weights (in_count x out_count), used by
  /// the forward pass to vectorize across neurons without changing the
  /// per-neuron accumulation order.
  std::span<const float> transposed_weights(std::size_t index) const {
    return transposed_.at(index);
  }

  std::size_t parameter_count() const noexcept;

  friend bool operator==(const Network& a, const Network& b);

 private:
  std::size_t input_dim_;
  std::vector<Layer> layers_;
  std::vector<std::vector<float>> transposed_;
};

/// Bit-level equality of every weight and bias (distinguishes -0.0 / +0.0).
bool bit_identical(const Network& a, const Network& b);

}  // namespace neurofault::nn
