#include "srss/image.hpp"

#include <string>

namespace srss {

GrayImage::GrayImage(std::uint32_t width, std::uint32_t height)
    : width_(width),
      height_(height),
      pixels_(static_cast<std::size_t>(width) * height, 0) {}

GrayImage::GrayImage(std::uint32_t width, std::uint32_t height,
                     std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (pixels_.size() != static_cast<std::size_t>(width_) * height_) {
    throw InvalidParams("GrayImage: pixel buffer holds " +
                        std::to_string(pixels_.size()) + " bytes, expected " +
                        std::to_string(static_cast<std::size_t>(width_) * height_));
  }
}

std::uint8_t GrayImage::at(std::uint32_t row, std::uint32_t col) const {
  if (row >= height_ || col >= width_) {
    throw IndexOutOfRange("GrayImage::at(" + std::to_string(row) + ", " +
                          std::to_string(col) + ") outside " +
                          std::to_string(height_) + "x" + std::to_string(width_));
  }
  return pixels_[static_cast<std::size_t>(row) * width_ + col];
}

std::uint8_t& GrayImage::at(std::uint32_t row, std::uint32_t col) {
  if (row >= height_ || col >= width_) {
    throw IndexOutOfRange("GrayImage::at(" + std::to_string(row) + ", " +
                          std::to_string(col) + ") outside " +
                          std::to_string(height_) + "x" + std::to_string(width_));
  }
  return pixels_[static_cast<std::size_t>(row) * width_ + col];
}

}  // namespace srss
