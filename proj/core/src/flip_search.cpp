// Copyright 2026 The neurofault Authors
// SPDX-License-Identifier: Apache-2.0

#include "neurofault/attack/flip_search.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "neurofault/error.hpp"
#include "neurofault/nn/activation.hpp"

namespace neurofault::attack {

std::optional<std::size_t> softmax_class(std::span<const float> logits) {
  std::size_t pos_inf = 0;
  std::size_t inf_index = 0;
  std::vector<float> finite;
  std::vector<std::size_t> finite_index;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    const float v = logits[i];
    if (std::isnan(v)) return std::nullopt;
    if (std::isinf(v)) {
      if (v > 0) {
        ++pos_inf;
        inf_index = i;
      }
      continue;
    }
    finite.push_back(v);
    finite_index.push_back(i);
  }
  if (pos_inf > 1) return std::nullopt;
  if (pos_inf == 1) return inf_index;
  if (finite.empty()) return std::nullopt;
  const std::vector<float> probs = nn::activation_apply(nn::ActivationKind::Softmax, finite);
  return finite_index[nn::argmax(probs)];
}

FlipAttackResult find_targeted_flip(std::span<const float> logits, std::size_t target,
                                    const FlipSearchOptions& options) {
  if (logits.empty()) raise(ErrorKind::InvalidInput, "logit vector is empty");
  for (std::size_t i = 0; i < logits.size(); ++i) {
    if (!std::isfinite(logits[i])) {
      raise(ErrorKind::InvalidInput, "logit " + std::to_string(i) + " is not finite");
    }
  }
  if (target >= logits.size()) {
    raise(ErrorKind::OutOfRange, "target class " + std::to_string(target) + " but only " +
                                     std::to_string(logits.size()) + " logits");
  }

  FlipAttackResult result;
  result.neuron = target;
  result.pre_flip = logits[target];
  result.post_flip = logits[target];
  const std::size_t clean = *softmax_class(logits);
  result.resulting_class = clean;
  if (clean == target) {
    result.found = true;
    result.flip_required = false;
    return result;
  }

  std::vector<std::size_t> order{target};
  if (options.all_neurons) {
    for (std::size_t i = 0; i < logits.size(); ++i) {
      if (i != target) order.push_back(i);
    }
  }

  std::vector<float> work(logits.begin(), logits.end());
  std::optional<std::size_t> best;
  for (std::size_t neuron : order) {
    for (const auto& [bit, flipped] : fault::enumerate_flips(logits[neuron])) {
      work[neuron] = flipped;
      const std::optional<std::size_t> cls = softmax_class(work);
      work[neuron] = logits[neuron];
      FlipCandidate c{neuron, bit, logits[neuron], flipped, cls.has_value() && *cls == target};
      result.candidates.push_back(c);
      if (c.success &&
          (!best || std::abs(flipped) < std::abs(result.candidates[*best].new_value))) {
        best = result.candidates.size() - 1;
      }
    }
  }

  if (best) {
    const FlipCandidate& c = result.candidates[*best];
    result.found = true;
    result.neuron = c.neuron;
    result.bit = c.bit;
    result.pre_flip = c.old_value;
    result.post_flip = c.new_value;
    result.resulting_class = target;
  }
  return result;
}

std::vector<FlipEffect> flip_effect_report(float value) {
  if (!std::isfinite(value)) raise(ErrorKind::InvalidInput, "flip report needs a finite value");
  std::vector<FlipEffect> rows;
  rows.reserve(32);
  for (const auto& [bit, flipped] : fault::enumerate_flips(value)) {
    FlipEffect e;
    e.bit = bit;
    e.field = fault::field_of(bit);
    e.new_value = flipped;
    e.magnitude_ratio = value == 0.0f
                            ? std::numeric_limits<double>::infinity()
                            : std::abs(static_cast<double>(flipped)) / std::abs(static_cast<double>(value));
    rows.push_back(e);
  }
  return rows;
}

std::string format_flip_csv(const FlipAttackResult& result) {
  std::string out(kFlipCsvHeader);
  out += '\n';
  auto value_text = [](float v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.9g", static_cast<double>(v));
    return std::string(buf);
  };
  if (!result.flip_required) {
    out += std::to_string(result.neuron) + ",," + fault::to_hex(result.pre_flip) + ',' +
           fault::to_hex(result.post_flip) + ',' + value_text(result.post_flip) + ",1\n";
    return out;
  }
  for (const FlipCandidate& c : result.candidates) {
    out += std::to_string(c.neuron) + ',' + std::to_string(c.bit) + ',' + fault::to_hex(c.old_value) +
           ',' + fault::to_hex(c.new_value) + ',' + value_text(c.new_value) + ',' +
           (c.success ? "1" : "0") + '\n';
  }
  return out;
}

}  // namespace neurofault::attack
