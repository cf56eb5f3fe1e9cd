// Copyright 2026 The neurofault Authors
// SPDX-License-Identifier: Apache-2.0

#include "neurofault/campaign/sweep.hpp"

#include <string>

#include "neurofault/error.hpp"

namespace neurofault::campaign {
namespace {

std::string point_name(nn::ActivationKind target, std::size_t n) {
  return std::string(nn::to_string(target)) + " n=" + std::to_string(n);
}

}  // namespace

std::vector<SweepPoint> expand_grid(const SweepGrid& grid) {
  std::vector<SweepPoint> points;
  for (nn::ActivationKind target : grid.targets) {
    for (std::size_t k : grid.fault_counts) {
      for (std::size_t n : grid.widths) {
        SweepPoint p;
        p.target = target;
        p.n = n;
        p.k = k;
        if (grid.model_override) {
          p.model = *grid.model_override;
        } else {
          p.model = fault::FaultModel::skip_for(target);
        }
        points.push_back(p);
      }
    }
  }
  return points;
}

std::vector<SweepRow> sweep(const NetworkLookup& networks, const io::Dataset& data,
                            const SweepGrid& grid, const SweepOptions& options) {
  const std::vector<SweepPoint> points = expand_grid(grid);

  std::string missing;
  for (nn::ActivationKind target : grid.targets) {
    for (std::size_t n : grid.widths) {
      if (networks(target, n) == nullptr) {
        missing += (missing.empty() ? "" : ", ") + point_name(target, n);
      }
    }
  }
  if (!missing.empty()) raise(ErrorKind::Consistency, "missing network for grid points: " + missing);

  std::vector<SweepRow> rows;
  rows.reserve(points.size());
  for (const SweepPoint& point : points) {
    SweepRow row;
    row.point = point;
    const nn::Network& net = *networks(point.target, point.n);
    if (net.layer_count() < 2 && !options.target_layer) {
      raise(ErrorKind::Consistency, point_name(point.target, point.n) + ": network has no hidden layer");
    }
    const std::size_t layer = options.target_layer.value_or(net.layer_count() - 2);
    if (layer >= net.layer_count() || net.layer(layer).out_count != point.n) {
      raise(ErrorKind::Consistency, point_name(point.target, point.n) +
                                        ": target layer width does not match n");
    }
    // k == n faults the whole layer with no random choice left, so a sweep
    // treats it like k > n and leaves the point out.
    if (point.k >= point.n) {
      row.error = "fault count k=" + std::to_string(point.k) + " leaves no random subset of layer width n=" +
                  std::to_string(point.n);
    } else if (!point.model.compatible_with(net.layer(layer).activation)) {
      row.error = point.model.name() + " is incompatible with a " +
                  std::string(nn::to_string(net.layer(layer).activation)) + " layer";
    } else {
      CampaignConfig cfg;
      cfg.target_layer = layer;
      cfg.model = point.model;
      cfg.fault_count = point.k;
      cfg.input_count = options.input_count;
      cfg.criterion = options.criterion;
      cfg.seed = options.seed;
      cfg.threads = options.threads;
      cfg.keep_trials = false;
      row.result = run_campaign(net, data, cfg);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace neurofault::campaign
