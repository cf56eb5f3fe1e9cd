// Copyright 2026 The neurofault Authors
// SPDX-License-Identifier: Apache-2.0

#include "neurofault/nn/activation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "neurofault/error.hpp"

namespace neurofault::nn {

std::string_view to_string(ActivationKind kind) noexcept {
  switch (kind) {
    case ActivationKind::Relu: return "relu";
    case ActivationKind::Sigmoid: return "sigmoid";
    case ActivationKind::Tanh: return "tanh";
    case ActivationKind::Softmax: return "softmax";
  }
  return "unknown";
}

ActivationKind parse_activation(std::string_view name) {
  for (auto kind : kAllActivations) {
    if (to_string(kind) == name) return kind;
  }
  raise(ErrorKind::Format, "unknown activation '" + std::string(name) + "'");
}

float relu(float x) noexcept { return x > 0.0f ? x : 0.0f; }

float sigmoid(float x) noexcept { return 1.0f / (1.0f + std::exp(-x)); }

float tanh_act(float x) noexcept { return 2.0f / (1.0f + std::exp(-2.0f * x)) - 1.0f; }

float apply_scalar(ActivationKind kind, float x) {
  switch (kind) {
    case ActivationKind::Relu: return relu(x);
    case ActivationKind::Sigmoid: return sigmoid(x);
    case ActivationKind::Tanh: return tanh_act(x);
    case ActivationKind::Softmax: break;
  }
  raise(ErrorKind::InvalidInput, "softmax is not an element-wise activation");
}

void activation_apply_into(ActivationKind kind, std::span<const float> x,
                           std::span<float> out) noexcept {
  const std::size_t n = x.size();
  switch (kind) {
    case ActivationKind::Relu:
      for (std::size_t i = 0; i < n; ++i) out[i] = relu(x[i]);
      return;
    case ActivationKind::Sigmoid:
      for (std::size_t i = 0; i < n; ++i) out[i] = sigmoid(x[i]);
      return;
    case ActivationKind::Tanh:
      for (std::size_t i = 0; i < n; ++i) out[i] = tanh_act(x[i]);
      return;
    case ActivationKind::Softmax: {
      const float peak = *std::max_element(x.begin(), x.end());
      float total = 0.0f;
      for (std::size_t i = 0; i < n; ++i) {
        out[i] = std::exp(x[i] - peak);
        total += out[i];
      }
      for (std::size_t i = 0; i < n; ++i) out[i] /= total;
      return;
    }
  }
}

std::vector<float> activation_apply(ActivationKind kind, std::span<const float> x) {
  if (x.empty()) raise(ErrorKind::InvalidInput, "activation input is empty");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i])) {
      raise(ErrorKind::InvalidInput,
            "non-finite activation input at index " + std::to_string(i));
    }
  }
  std::vector<float> out(x.size());
  activation_apply_into(kind, x, out);
  return out;
}

std::size_t argmax(std::span<const float> values) noexcept {
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return best;
}

}  // namespace neurofault::nn
