// Copyright 2026 The neurofault Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "neurofault/io/dataset.hpp"
#include "neurofault/nn/network.hpp"
#include "neurofault/train/topology.hpp"

namespace neurofault::train {

struct TrainResult {
  nn::Network network;
  /// Mean training cross-entropy of each epoch, accumulated over the
  /// mini-batches as they were visited (pre-update losses).
  std::vector<double> epoch_loss;
};

using EpochCallback = std::function<void(std::size_t epoch, double loss)>;

/// Mini-batch SGD with classical momentum (v = m*v - lr*g; w += v) on mean
/// categorical cross-entropy. Samples are reshuffled every epoch from
/// `cfg.seed`; the result is reproducible from (spec, data, cfg).
/// Throws TrainingFailure naming the epoch if the loss becomes non-finite,
/// Shape if the dataset width does not match the topology.
TrainResult train(const TopologySpec& spec, const io::Dataset& data, const TrainConfig& cfg,
                  const EpochCallback& on_epoch = {});

/// Fraction of items whose binary32 prediction equals the label.
/// Throws InvalidInput on an empty dataset, Shape on a width mismatch.
double evaluate(const nn::Network& net, const io::Dataset& data);

/// Compares backprop gradients of the mean loss on (inputs, labels) against
/// central finite differences (step 1e-3) for a freshly initialized network,
/// all in binary64. Returns the maximum over parameters of
/// |analytic - numeric| / max(|analytic| + |numeric|, 1e-8).
double gradient_check(const TopologySpec& spec, const io::Dataset& batch, std::uint64_t seed);

}  // namespace neurofault::train
