// Copyright 2026 The neurofault Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "neurofault/nn/network.hpp"

namespace neurofault::nn {

/// Per-layer pre-activation ("Accum") and post-activation vectors of one
/// inference.
struct ForwardTrace {
  std::vector<std::vector<float>> pre_activation;
  std::vector<std::vector<float>> post_activation;
  std::size_t predicted = 0;

  std::span<const float> probabilities() const { return post_activation.back(); }
};

/// Accum_i = bias_i + sum_j w_ij * in_j, accumulated in binary32 in
/// ascending j. `accum` must have out_count entries.
void dense_accumulate(const Network& net, std::size_t layer_index,
                      std::span<const float> layer_input, std::span<float> accum);

/// Full binary32 forward pass. Throws Shape when input.size() != input_dim.
ForwardTrace forward(const Network& net, std::span<const float> input);

/// Recomputes layers [first, layer_count) of `trace` from `layer_input`,
/// the vector fed into layer `first`. Entries below `first` are untouched.
/// `trace` must already be sized for the network (e.g. from forward()).
void forward_suffix(const Network& net, std::size_t first,
                    std::span<const float> layer_input, ForwardTrace& trace);

/// Applies a layer's activation to an already-computed Accum vector and
/// continues through the remaining layers.
void forward_from_accum(const Network& net, std::size_t layer_index,
                        ForwardTrace& trace);

std::size_t predict(const Network& net, std::span<const float> input);

}  // namespace neurofault::nn
