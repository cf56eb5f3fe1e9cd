// Copyright 2026 The neurofault Authors
// SPDX-License-Identifier: Apache-2.0

#include "neurofault/campaign/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

#include "neurofault/error.hpp"
#include "neurofault/random.hpp"

namespace neurofault::campaign {
namespace {

// Input selection uses its own stream so it never collides with a trial seed.
constexpr std::uint64_t kInputStreamTag = 0x696e707574735eedULL;

void check_target(const nn::Network& net, std::size_t layer, const fault::FaultModel& model) {
  if (layer >= net.layer_count()) {
    raise(ErrorKind::OutOfRange, "target layer " + std::to_string(layer) + " but network has " +
                                     std::to_string(net.layer_count()) + " layers");
  }
  const nn::ActivationKind act = net.layer(layer).activation;
  if (!model.compatible_with(act)) {
    raise(ErrorKind::ModelMismatch, model.name() + " cannot target layer " +
                                        std::to_string(layer) + " (" +
                                        std::string(nn::to_string(act)) + ")");
  }
}

void check_neurons(std::span<const std::size_t> neurons, std::size_t width) {
  std::vector<std::size_t> sorted(neurons.begin(), neurons.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] >= width) {
      raise(ErrorKind::OutOfRange, "neuron " + std::to_string(sorted[i]) +
                                       " outside layer width " + std::to_string(width));
    }
    if (i > 0 && sorted[i] == sorted[i - 1]) {
      raise(ErrorKind::OutOfRange, "neuron " + std::to_string(sorted[i]) + " listed twice");
    }
  }
}

}  // namespace

std::string_view to_string(SuccessCriterion criterion) noexcept {
  return criterion == SuccessCriterion::VsCleanPrediction ? "clean" : "label";
}

SuccessCriterion parse_criterion(std::string_view text) {
  if (text == "clean") return SuccessCriterion::VsCleanPrediction;
  if (text == "label") return SuccessCriterion::VsTrueLabel;
  raise(ErrorKind::Format, "unknown success criterion '" + std::string(text) +
                               "' (expected clean or label)");
}

Interval wilson_interval_pct(std::size_t successes, std::size_t trials) {
  if (trials == 0) return {0.0, 100.0};
  constexpr double z = 1.959963984540054;
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double centre = (p + z2 / (2.0 * n)) / (1.0 + z2 / n);
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / (1.0 + z2 / n);
  // Clamp so rounding never pushes the point estimate outside the interval.
  return {100.0 * std::clamp(centre - half, 0.0, p), 100.0 * std::clamp(centre + half, p, 1.0)};
}

nn::ForwardTrace inject_faults(const nn::Network& net, const nn::ForwardTrace& clean,
                               std::size_t layer, std::span<const std::size_t> neurons,
                               const fault::FaultModel& model) {
  check_target(net, layer, model);
  check_neurons(neurons, net.layer(layer).out_count);
  nn::ForwardTrace faulted = clean;
  if (neurons.empty()) return faulted;

  const nn::ActivationKind act = net.layer(layer).activation;
  if (act == nn::ActivationKind::Softmax) {
    // Softmax is vector-level: flip the stored logit, then renormalize.
    for (std::size_t n : neurons) {
      faulted.pre_activation[layer][n] =
          fault::apply_fault_unchecked(model, 0.0f, faulted.pre_activation[layer][n]);
    }
    nn::forward_from_accum(net, layer, faulted);
    return faulted;
  }

  std::vector<float>& out = faulted.post_activation[layer];
  const std::vector<float>& accum = clean.pre_activation[layer];
  for (std::size_t n : neurons) out[n] = fault::apply_fault_unchecked(model, accum[n], out[n]);
  if (layer + 1 < net.layer_count()) {
    nn::forward_suffix(net, layer + 1, out, faulted);
  } else {
    faulted.predicted = nn::argmax(out);
  }
  return faulted;
}

CampaignResult run_campaign(const nn::Network& net, const io::Dataset& data,
                            const CampaignConfig& cfg) {
  check_target(net, cfg.target_layer, cfg.model);
  const std::size_t width = net.layer(cfg.target_layer).out_count;
  if (cfg.neurons) {
    check_neurons(*cfg.neurons, width);
  } else if (cfg.fault_count > width) {
    raise(ErrorKind::OutOfRange, "fault count " + std::to_string(cfg.fault_count) +
                                     " exceeds target layer width " + std::to_string(width));
  }
  if (cfg.input_count > data.size()) {
    raise(ErrorKind::OutOfRange, "requested " + std::to_string(cfg.input_count) +
                                     " inputs from a dataset of " + std::to_string(data.size()));
  }
  if (data.feature_dim() != net.input_dim()) {
    raise(ErrorKind::Shape, "dataset width does not match network input_dim");
  }

  Rng input_rng(derive_seed(cfg.seed, kInputStreamTag));
  const std::vector<std::size_t> inputs =
      input_rng.sample_without_replacement(data.size(), cfg.input_count);

  std::vector<TrialRecord> records(inputs.size());
  auto run_trial = [&](std::size_t t) {
    TrialRecord& rec = records[t];
    rec.input_index = inputs[t];
    rec.label = data.label(inputs[t]);
    if (cfg.neurons) {
      rec.faulted_neurons = *cfg.neurons;
    } else {
      Rng trial_rng(derive_seed(cfg.seed, t));
      rec.faulted_neurons = trial_rng.sample_without_replacement(width, cfg.fault_count);
    }
    const nn::ForwardTrace clean = nn::forward(net, data.image(inputs[t]));
    rec.clean_class = clean.predicted;
    rec.faulted_class =
        inject_faults(net, clean, cfg.target_layer, rec.faulted_neurons, cfg.model).predicted;
    const std::size_t reference =
        cfg.criterion == SuccessCriterion::VsCleanPrediction ? rec.clean_class : rec.label;
    rec.success = rec.faulted_class != reference;
  };

  std::size_t threads = cfg.threads == 0 ? std::thread::hardware_concurrency() : cfg.threads;
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(1, inputs.size()));
  if (threads == 1) {
    for (std::size_t t = 0; t < inputs.size(); ++t) run_trial(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    for (std::size_t w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        for (std::size_t t = next++; t < inputs.size(); t = next++) {
          try {
            run_trial(t);
          } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
            return;
          }
        }
      });
    }
    pool.clear();
    if (failure) std::rethrow_exception(failure);
  }

  CampaignResult result;
  result.trials = records.size();
  for (const TrialRecord& rec : records) result.successes += rec.success ? 1 : 0;
  result.rate_pct = result.trials == 0 ? 0.0
                                       : 100.0 * static_cast<double>(result.successes) /
                                             static_cast<double>(result.trials);
  result.ci95 = wilson_interval_pct(result.successes, result.trials);
  if (cfg.keep_trials) result.records = std::move(records);
  return result;
}

ProbeResult single_fault_probe(const nn::Network& net, std::span<const float> input,
                               std::size_t layer, std::size_t neuron,
                               const fault::FaultModel& model) {
  ProbeResult probe;
  probe.clean = nn::forward(net, input);
  const std::size_t neurons[] = {neuron};
  probe.faulted = inject_faults(net, probe.clean, layer, neurons, model);
  probe.changed = probe.clean.predicted != probe.faulted.predicted;
  return probe;
}

}  // namespace neurofault::campaign
