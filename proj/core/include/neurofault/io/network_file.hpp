// Copyright 2026 The neurofault Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "neurofault/nn/network.hpp"

namespace neurofault::io {

inline constexpr int kNetworkFormatVersion = 1;

// Network file layout (JSON):
//   {"version":1, "input_dim":N,
//    "layers":[{"in":..,"out":..,"activation":"relu|sigmoid|tanh|softmax",
//               "weights_hex":[["0x........",...],...], "biases_hex":[...],
//               "weights":[[decimal,...],...], "biases":[...]}]}
// The *_hex arrays are authoritative; the decimal arrays are informational
// and ignored on load.

std::string network_to_json(const nn::Network& net);
nn::Network network_from_json(std::string_view text);

void save_network(const nn::Network& net, const std::filesystem::path& path);
/// Throws Io, Format (bad JSON / unknown activation), Consistency (shape),
/// UnsupportedVersion.
nn::Network load_network(const std::filesystem::path& path);

}  // namespace neurofault::io
