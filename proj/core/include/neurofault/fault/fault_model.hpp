// Copyright 2026 The neurofault Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "neurofault/nn/activation.hpp"

namespace neurofault::fault {

/// Fault effects observed on the activation functions of the attacked
/// microcontroller, plus plain register bit flips.
///
///   relu_skip          skipped "jmp end": the else branch always runs, y' = 0
///   sigmoid_neg_skip   skipped negation in exp(-x):  y' = 1/(1+exp(x))
///   tanh_neg_skip      skipped negation in exp(-2x): y' = 2/(1+exp(2x)) - 1
///   bit_flip:<b>       one bit of a binary32 value inverted
///
/// There is no instruction-skip model for softmax: faulting it on the device
/// only produced invalid output. Softmax layers can be attacked with bit_flip,
/// which then lands on the pre-softmax value.
class FaultModel {
 public:
  enum class Kind { ReluSkip, SigmoidNegSkip, TanhNegSkip, BitFlip };

  static FaultModel relu_skip() { return FaultModel(Kind::ReluSkip, 0); }
  static FaultModel sigmoid_neg_skip() { return FaultModel(Kind::SigmoidNegSkip, 0); }
  static FaultModel tanh_neg_skip() { return FaultModel(Kind::TanhNegSkip, 0); }
  /// Throws OutOfRange unless 0 <= bit <= 31.
  static FaultModel bit_flip(int bit);

  /// The instruction-skip model that targets `kind`. Throws ModelMismatch for
  /// softmax.
  static FaultModel skip_for(nn::ActivationKind kind);

  /// Parses "relu_skip", "sigmoid_neg_skip", "tanh_neg_skip", "bit_flip:<0-31>".
  static FaultModel parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  int bit() const noexcept { return bit_; }

  bool compatible_with(nn::ActivationKind activation) const noexcept;

  std::string name() const;

  friend bool operator==(const FaultModel&, const FaultModel&) = default;

 private:
  FaultModel(Kind kind, int bit) : kind_(kind), bit_(bit) {}

  Kind kind_;
  int bit_;
};

/// Faulted output of one neuron given its pre-activation `x` and clean
/// output `y`. Skip models recompute from the corrupted formula; bit_flip
/// inverts a bit of `y`. Throws ModelMismatch for incompatible pairs.
float apply_fault(const FaultModel& model, nn::ActivationKind activation, float x, float y);

/// apply_fault without the compatibility check.
float apply_fault_unchecked(const FaultModel& model, float x, float y) noexcept;

}  // namespace neurofault::fault
