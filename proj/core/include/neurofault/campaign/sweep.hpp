// Copyright 2026 The neurofault Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "neurofault/campaign/campaign.hpp"

namespace neurofault::campaign {

/// Grid of (target function, n, k). Each target function is attacked with
/// its instruction-skip model unless `model_override` is set.
struct SweepGrid {
  std::vector<nn::ActivationKind> targets;
  std::vector<std::size_t> widths;        // n
  std::vector<std::size_t> fault_counts;  // k
  std::optional<fault::FaultModel> model_override;
};

struct SweepOptions {
  /// Layer to attack; defaults to the last hidden layer.
  std::optional<std::size_t> target_layer;
  std::size_t input_count = 800;
  SuccessCriterion criterion = SuccessCriterion::VsCleanPrediction;
  std::uint64_t seed = 0;
  std::size_t threads = 0;
};

struct SweepPoint {
  nn::ActivationKind target = nn::ActivationKind::Relu;
  std::size_t n = 0;
  std::size_t k = 0;
  fault::FaultModel model = fault::FaultModel::relu_skip();
};

/// One grid point. `result` is empty and `error` set when the point violates
/// a precondition (e.g. k >= n); such rows are flagged, not fatal.
struct SweepRow {
  SweepPoint point;
  std::optional<CampaignResult> result;
  std::string error;
};

/// Returns the network trained for (target, n), or nullptr if absent.
using NetworkLookup = std::function<const nn::Network*(nn::ActivationKind target, std::size_t n)>;

/// Grid points in row order: target-major, then k, then n, each in the
/// order given.
std::vector<SweepPoint> expand_grid(const SweepGrid& grid);

/// Runs every grid point. Throws Consistency listing all grid points without
/// a network before running anything.
std::vector<SweepRow> sweep(const NetworkLookup& networks, const io::Dataset& data,
                            const SweepGrid& grid, const SweepOptions& options);

}  // namespace neurofault::campaign
