// Copyright 2026 The neurofault Authors
// SPDX-License-Identifier: Apache-2.0

#include "neurofault/fault/binary32.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "neurofault/error.hpp"

namespace neurofault::fault {

double Binary32View::normal_value() const noexcept {
  const double significand = 1.0 + static_cast<double>(mantissa) * 0x1.0p-23;
  const double magnitude = std::ldexp(significand, static_cast<int>(exponent) - 127);
  return sign ? -magnitude : magnitude;
}

std::string_view to_string(BitField field) noexcept {
  switch (field) {
    case BitField::Sign: return "sign";
    case BitField::Exponent: return "exponent";
    case BitField::Mantissa: return "mantissa";
  }
  return "unknown";
}

std::string to_hex(float value) {
  char buf[11];
  std::snprintf(buf, sizeof buf, "0x%08x", static_cast<unsigned>(to_bits(value)));
  return buf;
}

float from_hex(std::string_view text) {
  if (text.size() != 10 || text[0] != '0' || (text[1] != 'x' && text[1] != 'X')) {
    raise(ErrorKind::Format, "expected 0x followed by 8 hex digits, got '" + std::string(text) + "'");
  }
  std::uint32_t bits = 0;
  const char* first = text.data() + 2;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, bits, 16);
  if (ec != std::errc{} || ptr != last) {
    raise(ErrorKind::Format, "malformed hex float '" + std::string(text) + "'");
  }
  return from_bits(bits);
}

float bit_flip32(float value, int bit) {
  if (bit < 0 || bit > 31) {
    raise(ErrorKind::OutOfRange, "bit index " + std::to_string(bit) + " outside [0,31]");
  }
  return from_bits(to_bits(value) ^ (std::uint32_t{1} << bit));
}

std::array<std::pair<int, float>, 32> enumerate_flips(float value) noexcept {
  std::array<std::pair<int, float>, 32> out{};
  const std::uint32_t bits = to_bits(value);
  for (int k = 0; k < 32; ++k) {
    const int bit = 31 - k;
    out[k] = {bit, from_bits(bits ^ (std::uint32_t{1} << bit))};
  }
  return out;
}

}  // namespace neurofault::fault
