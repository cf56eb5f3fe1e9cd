// Copyright 2026 The neurofault Authors
// SPDX-License-Identifier: Apache-2.0

#include "neurofault/error.hpp"

namespace neurofault {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::Shape: return "shape";
    case ErrorKind::Format: return "format";
    case ErrorKind::Consistency: return "consistency";
    case ErrorKind::Io: return "io";
    case ErrorKind::UnsupportedVersion: return "unsupported-version";
    case ErrorKind::ModelMismatch: return "model-mismatch";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::TrainingFailure: return "training-failure";
    case ErrorKind::Usage: return "usage";
  }
  return "unknown";
}

void raise(ErrorKind kind, const std::string& message) {
  throw Error(kind, std::string(to_string(kind)) + ": " + message);
}

}  // namespace neurofault
