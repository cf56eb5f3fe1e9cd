// Copyright 2026 The neurofault Authors
// SPDX-License-Identifier: Apache-2.0

#include "neurofault/io/dataset.hpp"

#include <array>
#include <fstream>
#include <string>

#include "neurofault/error.hpp"

namespace neurofault::io {
namespace {

constexpr std::uint32_t kImageMagic = 0x00000803;
constexpr std::uint32_t kLabelMagic = 0x00000801;

class IdxReader {
 public:
  explicit IdxReader(const std::filesystem::path& path) : path_(path), in_(path, std::ios::binary) {
    if (!in_) raise(ErrorKind::Io, "cannot open " + path.string());
  }

  std::uint32_t read_u32() {
    std::array<unsigned char, 4> b{};
    read_bytes(b.data(), b.size(), "header");
    return (std::uint32_t{b[0]} << 24) | (std::uint32_t{b[1]} << 16) |
           (std::uint32_t{b[2]} << 8) | std::uint32_t{b[3]};
  }

  void read_bytes(unsigned char* out, std::size_t count, const char* what) {
    in_.read(reinterpret_cast<char*>(out), static_cast<std::streamsize>(count));
    if (static_cast<std::size_t>(in_.gcount()) != count) {
      raise(ErrorKind::Io, path_.string() + ": truncated " + what + " (wanted " +
                               std::to_string(count) + " bytes, got " +
                               std::to_string(in_.gcount()) + ")");
    }
  }

  void expect_magic(std::uint32_t expected) {
    const std::uint32_t magic = read_u32();
    if (magic != expected) {
      char buf[96];
      std::snprintf(buf, sizeof buf, ": bad IDX magic 0x%08x (expected 0x%08x)", magic, expected);
      raise(ErrorKind::Format, path_.string() + buf);
    }
  }

 private:
  std::filesystem::path path_;
  std::ifstream in_;
};

}  // namespace

std::string_view to_string(Split split) noexcept {
  return split == Split::Train ? "train" : "test";
}

Dataset::Dataset(std::size_t feature_dim, std::vector<float> pixels,
                 std::vector<std::uint8_t> labels, Split split)
    : feature_dim_(feature_dim), pixels_(std::move(pixels)), labels_(std::move(labels)), split_(split) {
  if (feature_dim_ == 0) raise(ErrorKind::Consistency, "dataset feature_dim must be positive");
  if (pixels_.size() != labels_.size() * feature_dim_) {
    raise(ErrorKind::Consistency, "dataset has " + std::to_string(labels_.size()) +
                                      " labels but " + std::to_string(pixels_.size()) +
                                      " pixel values for feature_dim " +
                                      std::to_string(feature_dim_));
  }
  for (std::size_t i = 0; i < pixels_.size(); ++i) {
    if (!(pixels_[i] >= 0.0f && pixels_[i] <= 1.0f)) {
      raise(ErrorKind::Consistency, "pixel " + std::to_string(i) + " outside [0,1]");
    }
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] >= kMaxClasses) {
      raise(ErrorKind::Consistency, "label " + std::to_string(labels_[i]) + " at item " +
                                        std::to_string(i) + " is not a digit class");
    }
  }
}

Dataset Dataset::subset(std::span<const std::size_t> indices) const {
  std::vector<float> pixels;
  std::vector<std::uint8_t> labels;
  pixels.reserve(indices.size() * feature_dim_);
  labels.reserve(indices.size());
  for (std::size_t idx : indices) {
    if (idx >= size()) raise(ErrorKind::OutOfRange, "subset index " + std::to_string(idx));
    const auto img = image(idx);
    pixels.insert(pixels.end(), img.begin(), img.end());
    labels.push_back(labels_[idx]);
  }
  return Dataset(feature_dim_, std::move(pixels), std::move(labels), split_);
}

Dataset Dataset::head(std::size_t count) const {
  count = std::min(count, size());
  std::vector<float> pixels(pixels_.begin(), pixels_.begin() + static_cast<std::ptrdiff_t>(count * feature_dim_));
  std::vector<std::uint8_t> labels(labels_.begin(), labels_.begin() + static_cast<std::ptrdiff_t>(count));
  return Dataset(feature_dim_, std::move(pixels), std::move(labels), split_);
}

Dataset load_mnist(const std::filesystem::path& images, const std::filesystem::path& labels,
                   Split split) {
  IdxReader image_file(images);
  image_file.expect_magic(kImageMagic);
  const std::uint32_t image_count = image_file.read_u32();
  const std::uint32_t rows = image_file.read_u32();
  const std::uint32_t cols = image_file.read_u32();
  if (rows * cols != kMnistPixels) {
    raise(ErrorKind::Format, images.string() + ": expected 28x28 images, got " +
                                 std::to_string(rows) + "x" + std::to_string(cols));
  }

  IdxReader label_file(labels);
  label_file.expect_magic(kLabelMagic);
  const std::uint32_t label_count = label_file.read_u32();
  if (label_count != image_count) {
    raise(ErrorKind::Consistency, "image count " + std::to_string(image_count) +
                                      " != label count " + std::to_string(label_count));
  }

  std::vector<unsigned char> raw(std::size_t{image_count} * kMnistPixels);
  image_file.read_bytes(raw.data(), raw.size(), "image data");
  std::vector<std::uint8_t> label_bytes(label_count);
  label_file.read_bytes(label_bytes.data(), label_bytes.size(), "label data");

  std::vector<float> pixels(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) pixels[i] = static_cast<float>(raw[i]) / 255.0f;
  return Dataset(kMnistPixels, std::move(pixels), std::move(label_bytes), split);
}

Dataset load_mnist_split(const std::filesystem::path& directory, Split split) {
  const std::string prefix = split == Split::Train ? "train" : "t10k";
  return load_mnist(directory / (prefix + "-images-idx3-ubyte"),
                    directory / (prefix + "-labels-idx1-ubyte"), split);
}

}  // namespace neurofault::io
