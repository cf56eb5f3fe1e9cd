// Copyright 2026 The neurofault Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

namespace neurofault::io {

enum class Split { Train, Test };

std::string_view to_string(Split split) noexcept;

inline constexpr std::size_t kMnistPixels = 28 * 28;
inline constexpr std::size_t kMaxClasses = 10;

/// Images stored contiguously, `feature_dim` floats each, pixels in [0,1].
/// The constructor enforces the invariants (equal counts, pixel range,
/// label < 10) and throws Consistency on violation.
class Dataset {
 public:
  Dataset(std::size_t feature_dim, std::vector<float> pixels,
          std::vector<std::uint8_t> labels, Split split);

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  std::size_t feature_dim() const noexcept { return feature_dim_; }
  Split split() const noexcept { return split_; }

  std::span<const float> image(std::size_t index) const {
    return {pixels_.data() + index * feature_dim_, feature_dim_};
  }
  std::size_t label(std::size_t index) const { return labels_[index]; }
  std::span<const std::uint8_t> labels() const noexcept { return labels_; }
  std::span<const float> pixels() const noexcept { return pixels_; }

  /// Copy holding only `indices`, in the given order.
  Dataset subset(std::span<const std::size_t> indices) const;
  /// The first `count` items.
  Dataset head(std::size_t count) const;

 private:
  std::size_t feature_dim_;
  std::vector<float> pixels_;
  std::vector<std::uint8_t> labels_;
  Split split_;
};

/// Reads an IDX image/label file pair (big-endian magic 0x00000803 for
/// images, 0x00000801 for labels). Pixels are scaled by 1/255.
/// Errors: Format for a wrong magic or non-28x28 images, Consistency when the
/// two counts differ, Io when a file is missing or truncated.
Dataset load_mnist(const std::filesystem::path& images, const std::filesystem::path& labels,
                   Split split);

/// Loads the canonical file names from `directory`
/// (train-images-idx3-ubyte / t10k-images-idx3-ubyte, ...).
Dataset load_mnist_split(const std::filesystem::path& directory, Split split);

}  // namespace neurofault::io
