// Copyright 2026 The neurofault Authors
// SPDX-License-Identifier: Apache-2.0

#include "neurofault/nn/network.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "neurofault/error.hpp"

namespace neurofault::nn {
namespace {

void check_finite(std::span<const float> values, std::size_t layer, const char* what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      raise(ErrorKind::InvalidInput, "layer " + std::to_string(layer) + ": non-finite " +
                                         what + " at index " + std::to_string(i));
    }
  }
}

}  // namespace

Network::Network(std::size_t input_dim, std::vector<Layer> layers)
    : input_dim_(input_dim), layers_(std::move(layers)) {
  if (input_dim_ == 0) raise(ErrorKind::Consistency, "input_dim must be positive");
  if (layers_.empty()) raise(ErrorKind::Consistency, "network has no layers");

  std::size_t expected_in = input_dim_;
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    const Layer& layer = layers_[l];
    const std::string where = "layer " + std::to_string(l);
    if (layer.out_count == 0) raise(ErrorKind::Consistency, where + ": zero neurons");
    if (layer.in_count != expected_in) {
      raise(ErrorKind::Consistency, where + ": in_count " + std::to_string(layer.in_count) +
                                        " does not match previous width " +
                                        std::to_string(expected_in));
    }
    if (layer.weights.size() != layer.in_count * layer.out_count) {
      raise(ErrorKind::Consistency, where + ": weights size " +
                                        std::to_string(layer.weights.size()) + " != " +
                                        std::to_string(layer.out_count) + "x" +
                                        std::to_string(layer.in_count));
    }
    if (layer.biases.size() != layer.out_count) {
      raise(ErrorKind::Consistency, where + ": biases length " +
                                        std::to_string(layer.biases.size()) +
                                        " != out_count " + std::to_string(layer.out_count));
    }
    if (layer.activation == ActivationKind::Softmax && l + 1 != layers_.size()) {
      raise(ErrorKind::Consistency, where + ": softmax is only allowed on the last layer");
    }
    check_finite(layer.weights, l, "weight");
    check_finite(layer.biases, l, "bias");
    expected_in = layer.out_count;
  }

  transposed_.reserve(layers_.size());
  for (const Layer& layer : layers_) {
    std::vector<float> t(layer.weights.size());
    for (std::size_t i = 0; i < layer.out_count; ++i) {
      for (std::size_t j = 0; j < layer.in_count; ++j) {
        t[j * layer.out_count + i] = layer.weights[i * layer.in_count + j];
      }
    }
    transposed_.push_back(std::move(t));
  }
}

std::size_t Network::parameter_count() const noexcept {
  std::size_t total = 0;
  for (const Layer& layer : layers_) total += layer.weights.size() + layer.biases.size();
  return total;
}

bool operator==(const Network& a, const Network& b) { return bit_identical(a, b); }

bool bit_identical(const Network& a, const Network& b) {
  if (a.input_dim() != b.input_dim() || a.layer_count() != b.layer_count()) return false;
  auto same_bits = [](std::span<const float> x, std::span<const float> y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (std::bit_cast<std::uint32_t>(x[i]) != std::bit_cast<std::uint32_t>(y[i])) return false;
    }
    return true;
  };
  for (std::size_t l = 0; l < a.layer_count(); ++l) {
    const Layer& la = a.layer(l);
    const Layer& lb = b.layer(l);
    if (la.in_count != lb.in_count || la.out_count != lb.out_count ||
        la.activation != lb.activation || !same_bits(la.weights, lb.weights) ||
        !same_bits(la.biases, lb.biases)) {
      return false;
    }
  }
  return true;
}

}  // namespace neurofault::nn
