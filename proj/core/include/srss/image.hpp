#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "srss/errors.hpp"

namespace srss {

/// 8-bit grayscale image with row-major pixel storage.
class GrayImage {
 public:
  GrayImage() = default;
  GrayImage(std::uint32_t width, std::uint32_t height);
  GrayImage(std::uint32_t width, std::uint32_t height,
            std::vector<std::uint8_t> pixels);

  std::uint32_t width() const { return width_; }
  std::uint32_t height() const { return height_; }
  std::size_t pixel_count() const { return pixels_.size(); }
  bool empty() const { return pixels_.empty(); }

  std::uint8_t at(std::uint32_t row, std::uint32_t col) const;
  std::uint8_t& at(std::uint32_t row, std::uint32_t col);

  std::span<const std::uint8_t> pixels() const { return pixels_; }
  std::span<std::uint8_t> pixels() { return pixels_; }

  bool operator==(const GrayImage&) const = default;

 private:
  std::uint32_t width_ = 0;
  std::uint32_t height_ = 0;
  std::vector<std::uint8_t> pixels_;
};

}  // namespace srss
