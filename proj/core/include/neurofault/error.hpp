// Copyright 2026 The neurofault Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace neurofault {

enum class ErrorKind {
  InvalidInput,      // non-finite value, malformed argument
  Shape,             // dimension mismatch at call time
  Format,            // bad magic, unknown activation, unparsable file
  Consistency,       // self-inconsistent file or dataset contents
  Io,                // unreadable / truncated file
  UnsupportedVersion,
  ModelMismatch,     // fault model incompatible with activation
  OutOfRange,        // index or bit outside bounds
  TrainingFailure,   // non-finite loss
  Usage,             // CLI argument error
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the toolkit; `kind()` distinguishes causes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& message);

}  // namespace neurofault
