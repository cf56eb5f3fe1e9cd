// Copyright 2026 The neurofault Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "neurofault/fault/binary32.hpp"

namespace neurofault::attack {

/// One tried single-bit flip.
struct FlipCandidate {
  std::size_t neuron = 0;
  int bit = 0;
  float old_value = 0.0f;
  float new_value = 0.0f;
  bool success = false;
};

struct FlipAttackResult {
  bool found = false;
  /// False when the target already wins without any flip.
  bool flip_required = true;
  std::size_t neuron = 0;
  std::optional<int> bit;
  float pre_flip = 0.0f;
  float post_flip = 0.0f;
  /// Class predicted after the chosen flip (or without flip).
  std::size_t resulting_class = 0;
  /// Every flip evaluated, in search order.
  std::vector<FlipCandidate> candidates;
};

struct FlipSearchOptions {
  /// Also flip bits of the competing logits. Off by default: the attack
  /// corrupts only the target class value, others are kept the same.
  bool all_neurons = false;
};

/// Class chosen by softmax over `logits` (argmax, lowest index on ties).
/// Finite vectors go through the core softmax; a single +Inf entry wins
/// outright, -Inf entries get probability zero. Returns nullopt when the
/// vector holds NaN or more than one +Inf (no valid softmax output).
std::optional<std::size_t> softmax_class(std::span<const float> logits);

/// Exhaustive single-bit-flip search that makes `target` the predicted
/// class. Candidates are the 32 bits of the target logit (bit 31 down to 0)
/// and, with all_neurons, then every bit of each other logit in index
/// order. Among successful flips the one with the smallest |new value| is
/// chosen, earliest in search order on ties. NaN results never succeed.
/// Throws InvalidInput for non-finite or empty logits, OutOfRange for a bad
/// target.
FlipAttackResult find_targeted_flip(std::span<const float> logits, std::size_t target,
                                    const FlipSearchOptions& options = {});

struct FlipEffect {
  int bit = 0;
  fault::BitField field = fault::BitField::Mantissa;
  float new_value = 0.0f;
  /// |new| / |old|; infinite when the old value is zero.
  double magnitude_ratio = 0.0;
};

/// Effect of each of the 32 single-bit flips of `value`, bit 31 first.
/// Throws InvalidInput for non-finite input.
std::vector<FlipEffect> flip_effect_report(float value);

inline constexpr std::string_view kFlipCsvHeader = "neuron,bit,old_hex,new_hex,new_value,success";

/// One line per candidate. When no flip was required a single line with an
/// empty bit field is written.
std::string format_flip_csv(const FlipAttackResult& result);

}  // namespace neurofault::attack
