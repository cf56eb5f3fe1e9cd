// Copyright 2026 The neurofault Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "neurofault/campaign/sweep.hpp"

namespace neurofault::campaign {

inline constexpr std::string_view kSweepCsvHeader =
    "target_function,n,k,trials,successes,rate_pct,ci_low,ci_high";

/// One parsed or emitted CSV line.
struct SweepCsvRow {
  std::string target_function;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t trials = 0;
  std::size_t successes = 0;
  double rate_pct = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
};

/// Completed rows only; flagged rows are left out. Rates use two decimals.
std::vector<SweepCsvRow> to_csv_rows(std::span<const SweepRow> rows);
std::string format_sweep_csv(std::span<const SweepCsvRow> rows);
inline std::string format_sweep_csv(std::span<const SweepRow> rows) {
  return format_sweep_csv(to_csv_rows(rows));
}
/// Throws Format on a wrong header or malformed line.
std::vector<SweepCsvRow> parse_sweep_csv(std::string_view text);

/// Line chart of success rate (y, percent) against layer width (x), one
/// polyline per target function and k.
std::string render_sweep_svg(std::span<const SweepCsvRow> rows, std::string_view title);

}  // namespace neurofault::campaign
