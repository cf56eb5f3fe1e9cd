// Copyright 2026 The neurofault Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace neurofault::fault {

/// IEEE 754 binary32 fields. Bit 0 is the least significant mantissa bit,
/// bit 31 the sign. The most significant byte (bits 31..24) holds the sign
/// and the top seven exponent bits, so "the sixth bit of the top byte"
/// counted from the left is bit 26.
struct Binary32View {
  std::uint32_t sign = 0;      // b31
  std::uint32_t exponent = 0;  // b30..b23, biased by 127
  std::uint32_t mantissa = 0;  // b22..b0

  static Binary32View decompose(float value) noexcept {
    const auto bits = std::bit_cast<std::uint32_t>(value);
    return {bits >> 31, (bits >> 23) & 0xffu, bits & 0x7fffffu};
  }

  std::uint32_t bits() const noexcept {
    return (sign << 31) | ((exponent & 0xffu) << 23) | (mantissa & 0x7fffffu);
  }

  float recompose() const noexcept { return std::bit_cast<float>(bits()); }

  bool is_normal() const noexcept { return exponent != 0 && exponent != 0xffu; }

  /// (-1)^sign * 2^(exponent-127) * 1.mantissa, evaluated in binary64.
  /// Only meaningful for normal values.
  double normal_value() const noexcept;
};

enum class BitField { Sign, Exponent, Mantissa };

constexpr BitField field_of(int bit) noexcept {
  if (bit == 31) return BitField::Sign;
  if (bit >= 23) return BitField::Exponent;
  return BitField::Mantissa;
}

std::string_view to_string(BitField field) noexcept;

inline std::uint32_t to_bits(float value) noexcept { return std::bit_cast<std::uint32_t>(value); }
inline float from_bits(std::uint32_t bits) noexcept { return std::bit_cast<float>(bits); }

/// "0x401b851f"
std::string to_hex(float value);
/// Parses "0x........" (exactly eight hex digits); throws Format.
float from_hex(std::string_view text);

/// Inverts bit `bit` of `value`. Throws OutOfRange unless 0 <= bit <= 31.
float bit_flip32(float value, int bit);

/// All 32 single-bit flips of `value`, ordered from bit 31 down to bit 0.
std::array<std::pair<int, float>, 32> enumerate_flips(float value) noexcept;

}  // namespace neurofault::fault
