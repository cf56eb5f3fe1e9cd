// Copyright 2026 The neurofault Authors
// SPDX-License-Identifier: Apache-2.0

#include "neurofault/fault/fault_model.hpp"

#include <charconv>
#include <cmath>

#include "neurofault/error.hpp"
#include "neurofault/fault/binary32.hpp"

namespace neurofault::fault {

using nn::ActivationKind;

FaultModel FaultModel::bit_flip(int bit) {
  if (bit < 0 || bit > 31) {
    raise(ErrorKind::OutOfRange, "bit_flip index " + std::to_string(bit) + " outside [0,31]");
  }
  return FaultModel(Kind::BitFlip, bit);
}

FaultModel FaultModel::skip_for(ActivationKind kind) {
  switch (kind) {
    case ActivationKind::Relu: return relu_skip();
    case ActivationKind::Sigmoid: return sigmoid_neg_skip();
    case ActivationKind::Tanh: return tanh_neg_skip();
    case ActivationKind::Softmax: break;
  }
  raise(ErrorKind::ModelMismatch, "no instruction-skip fault model exists for softmax");
}

FaultModel FaultModel::parse(std::string_view text) {
  if (text == "relu_skip") return relu_skip();
  if (text == "sigmoid_neg_skip") return sigmoid_neg_skip();
  if (text == "tanh_neg_skip") return tanh_neg_skip();
  constexpr std::string_view prefix = "bit_flip:";
  if (text.starts_with(prefix)) {
    const std::string_view digits = text.substr(prefix.size());
    int bit = -1;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), bit);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
      raise(ErrorKind::Format, "malformed bit index in '" + std::string(text) + "'");
    }
    return bit_flip(bit);
  }
  raise(ErrorKind::Format, "unknown fault model '" + std::string(text) + "'");
}

bool FaultModel::compatible_with(ActivationKind activation) const noexcept {
  switch (kind_) {
    case Kind::ReluSkip: return activation == ActivationKind::Relu;
    case Kind::SigmoidNegSkip: return activation == ActivationKind::Sigmoid;
    case Kind::TanhNegSkip: return activation == ActivationKind::Tanh;
    case Kind::BitFlip: return true;
  }
  return false;
}

std::string FaultModel::name() const {
  switch (kind_) {
    case Kind::ReluSkip: return "relu_skip";
    case Kind::SigmoidNegSkip: return "sigmoid_neg_skip";
    case Kind::TanhNegSkip: return "tanh_neg_skip";
    case Kind::BitFlip: return "bit_flip:" + std::to_string(bit_);
  }
  return "unknown";
}

float apply_fault_unchecked(const FaultModel& model, float x, float y) noexcept {
  switch (model.kind()) {
    case FaultModel::Kind::ReluSkip:
      return 0.0f;
    case FaultModel::Kind::SigmoidNegSkip:
      return 1.0f / (1.0f + std::exp(x));
    case FaultModel::Kind::TanhNegSkip:
      return 2.0f / (1.0f + std::exp(2.0f * x)) - 1.0f;
    case FaultModel::Kind::BitFlip:
      return from_bits(to_bits(y) ^ (std::uint32_t{1} << model.bit()));
  }
  return y;
}

float apply_fault(const FaultModel& model, ActivationKind activation, float x, float y) {
  if (!model.compatible_with(activation)) {
    raise(ErrorKind::ModelMismatch, model.name() + " cannot target a " +
                                        std::string(nn::to_string(activation)) + " neuron");
  }
  return apply_fault_unchecked(model, x, y);
}

}  // namespace neurofault::fault
