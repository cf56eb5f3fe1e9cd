// Copyright 2026 The neurofault Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "neurofault/fault/fault_model.hpp"
#include "neurofault/io/dataset.hpp"
#include "neurofault/nn/forward.hpp"
#include "neurofault/nn/network.hpp"

namespace neurofault::campaign {

enum class SuccessCriterion {
  VsCleanPrediction,  // faulted class != clean class on the same input
  VsTrueLabel,        // faulted class != dataset label
};

std::string_view to_string(SuccessCriterion criterion) noexcept;
SuccessCriterion parse_criterion(std::string_view text);

struct CampaignConfig {
  std::size_t target_layer = 0;
  fault::FaultModel model = fault::FaultModel::relu_skip();
  /// k: neurons faulted per trial.
  std::size_t fault_count = 0;
  /// When set, these neurons are faulted in every trial instead of a random
  /// k-subset (fault_count is then ignored).
  std::optional<std::vector<std::size_t>> neurons;
  std::size_t input_count = 800;
  SuccessCriterion criterion = SuccessCriterion::VsCleanPrediction;
  std::uint64_t seed = 0;
  /// Worker threads; 0 = hardware concurrency. Results do not depend on it.
  std::size_t threads = 0;
  /// Keep one TrialRecord per input in the result.
  bool keep_trials = true;
};

struct TrialRecord {
  std::size_t input_index = 0;  // index into the dataset
  std::vector<std::size_t> faulted_neurons;
  std::size_t label = 0;
  std::size_t clean_class = 0;
  std::size_t faulted_class = 0;
  bool success = false;

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

struct Interval {
  double low = 0.0;
  double high = 0.0;
};

/// 95% Wilson score interval for successes/trials, in percent.
Interval wilson_interval_pct(std::size_t successes, std::size_t trials);

struct CampaignResult {
  std::size_t successes = 0;
  std::size_t trials = 0;
  double rate_pct = 0.0;
  Interval ci95;
  std::vector<TrialRecord> records;
};

/// Copy of `clean` in which the listed neurons of `layer` are faulted and the
/// following layers recomputed. Element-wise layers replace the neuron output
/// with apply_fault(model, Accum, output); a softmax layer can only take
/// bit_flip, which corrupts the pre-softmax value before normalization.
/// Throws ModelMismatch / OutOfRange.
nn::ForwardTrace inject_faults(const nn::Network& net, const nn::ForwardTrace& clean,
                               std::size_t layer, std::span<const std::size_t> neurons,
                               const fault::FaultModel& model);

/// Monte-Carlo random-fault campaign. Inputs are drawn from `data` without
/// replacement using the master seed; trial t samples its neurons with
/// Rng(derive_seed(seed, t)). Deterministic in (net, data, cfg) regardless of
/// cfg.threads. Throws OutOfRange (k > width, input_count > data.size(),
/// neuron index out of bounds, duplicate neuron), ModelMismatch.
CampaignResult run_campaign(const nn::Network& net, const io::Dataset& data,
                            const CampaignConfig& cfg);

struct ProbeResult {
  nn::ForwardTrace clean;
  nn::ForwardTrace faulted;
  bool changed = false;
};

/// Single-fault probe: one neuron, one input.
ProbeResult single_fault_probe(const nn::Network& net, std::span<const float> input,
                               std::size_t layer, std::size_t neuron,
                               const fault::FaultModel& model);

}  // namespace neurofault::campaign
