// Copyright 2026 The neurofault Authors
// SPDX-License-Identifier: Apache-2.0

#include "neurofault/nn/forward.hpp"

#include <algorithm>
#include <string>

#include "neurofault/error.hpp"

namespace neurofault::nn {

void dense_accumulate(const Network& net, std::size_t layer_index,
                      std::span<const float> layer_input, std::span<float> accum) {
  const Layer& layer = net.layer(layer_index);
  const std::span<const float> wt = net.transposed_weights(layer_index);
  const std::size_t outs = layer.out_count;
  float* acc = accum.data();
  std::copy(layer.biases.begin(), layer.biases.end(), acc);
  // j outer, i inner: each acc[i] still sees its terms in ascending j, so the
  // result equals the naive per-neuron loop bit for bit.
  for (std::size_t j = 0; j < layer.in_count; ++j) {
    const float in = layer_input[j];
    const float* col = wt.data() + j * outs;
    for (std::size_t i = 0; i < outs; ++i) acc[i] += col[i] * in;
  }
}

void forward_from_accum(const Network& net, std::size_t layer_index, ForwardTrace& trace) {
  const std::size_t count = net.layer_count();
  for (std::size_t l = layer_index; l < count; ++l) {
    if (l != layer_index) {
      dense_accumulate(net, l, trace.post_activation[l - 1], trace.pre_activation[l]);
    }
    activation_apply_into(net.layer(l).activation, trace.pre_activation[l],
                          trace.post_activation[l]);
  }
  trace.predicted = argmax(trace.post_activation.back());
}

void forward_suffix(const Network& net, std::size_t first, std::span<const float> layer_input,
                    ForwardTrace& trace) {
  dense_accumulate(net, first, layer_input, trace.pre_activation[first]);
  forward_from_accum(net, first, trace);
}

ForwardTrace forward(const Network& net, std::span<const float> input) {
  if (input.size() != net.input_dim()) {
    raise(ErrorKind::Shape, "input length " + std::to_string(input.size()) +
                                " != network input_dim " + std::to_string(net.input_dim()));
  }
  ForwardTrace trace;
  trace.pre_activation.reserve(net.layer_count());
  trace.post_activation.reserve(net.layer_count());
  for (const Layer& layer : net.layers()) {
    trace.pre_activation.emplace_back(layer.out_count);
    trace.post_activation.emplace_back(layer.out_count);
  }
  forward_suffix(net, 0, input, trace);
  return trace;
}

std::size_t predict(const Network& net, std::span<const float> input) {
  return forward(net, input).predicted;
}

}  // namespace neurofault::nn
