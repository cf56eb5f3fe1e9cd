// Copyright 2026 The neurofault Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "neurofault/nn/activation.hpp"

namespace neurofault::train {

/// Widths of the attacked hidden layer evaluated in the original study.
inline constexpr std::array<std::size_t, 8> kStandardWidths = {15, 20, 30, 40, 50, 60, 70, 80};

/// Fault-targetable hidden activations.
inline constexpr std::array<nn::ActivationKind, 3> kTargetFunctions = {
    nn::ActivationKind::Relu, nn::ActivationKind::Sigmoid, nn::ActivationKind::Tanh};

struct HiddenLayerSpec {
  std::size_t width = 0;
  nn::ActivationKind activation = nn::ActivationKind::Relu;
};

/// input_dim -> hidden... -> classes (softmax).
struct TopologySpec {
  std::size_t input_dim = 784;
  std::vector<HiddenLayerSpec> hidden;
  std::size_t classes = 10;

  /// 784 -> 500 relu -> 500 relu -> 500 relu -> n target -> 10 softmax.
  static TopologySpec standard(nn::ActivationKind target, std::size_t n);

  /// Throws InvalidInput when a width is zero, classes < 2, or a hidden
  /// layer uses softmax.
  void validate() const;

  std::string describe() const;
};

struct TrainConfig {
  float learning_rate = 0.01f;
  float momentum = 0.9f;
  std::size_t batch_size = 64;
  std::size_t epochs = 20;
  std::uint64_t seed = 1;

  /// The 5-epoch desk profile.
  static TrainConfig fast() {
    TrainConfig cfg;
    cfg.epochs = 5;
    return cfg;
  }

  /// learning_rate > 0 is required for training; 0 is accepted so that a
  /// frozen run can be observed. Throws InvalidInput otherwise.
  void validate() const;
};

}  // namespace neurofault::train
