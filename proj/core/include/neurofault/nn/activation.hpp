// Copyright 2026 The neurofault Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

namespace neurofault::nn {

enum class ActivationKind { Relu, Sigmoid, Tanh, Softmax };

inline constexpr std::array<ActivationKind, 4> kAllActivations = {
    ActivationKind::Relu, ActivationKind::Sigmoid, ActivationKind::Tanh,
    ActivationKind::Softmax};

std::string_view to_string(ActivationKind kind) noexcept;

/// Parses "relu", "sigmoid", "tanh" or "softmax"; throws Format otherwise.
ActivationKind parse_activation(std::string_view name);

constexpr bool is_elementwise(ActivationKind kind) noexcept {
  return kind != ActivationKind::Softmax;
}

// Scalar forms, binary32 throughout. These are the exact expressions the
// attacked firmware evaluates, so tanh is 2/(1+exp(-2x))-1 and not std::tanh.
float relu(float x) noexcept;
float sigmoid(float x) noexcept;
float tanh_act(float x) noexcept;

/// Element-wise activation for relu/sigmoid/tanh. Softmax is rejected.
float apply_scalar(ActivationKind kind, float x);

/// Applies `kind` to `x`. Softmax subtracts the maximum before
/// exponentiating and normalizes with a sequential binary32 sum.
/// Throws InvalidInput for empty input or non-finite entries.
std::vector<float> activation_apply(ActivationKind kind, std::span<const float> x);

/// Same as activation_apply but writes into `out` (same size as `x`) and
/// skips validation. Used on the inference hot path.
void activation_apply_into(ActivationKind kind, std::span<const float> x,
                           std::span<float> out) noexcept;

/// Index of the maximum entry, lowest index on exact ties.
std::size_t argmax(std::span<const float> values) noexcept;

}  // namespace neurofault::nn
