#pragma once

// Shared helpers for the test suites.

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "srss/chaos.hpp"
#include "srss/cipher.hpp"
#include "srss/image.hpp"

namespace srss::test {

inline double unit_draw(std::mt19937& rng) {
  // 24 uniform bits; avoids the implementation-defined distributions.
  return static_cast<double>(rng() >> 8) * 0x1.0p-24;
}

inline GrayImage random_image(std::mt19937& rng, std::uint32_t width,
                              std::uint32_t height) {
  GrayImage img(width, height);
  for (std::uint8_t& v : img.pixels()) {
    v = static_cast<std::uint8_t>(rng() & 0xff);
  }
  return img;
}

// Samples the strongly chaotic band of the logistic map. Statistical
// checks (keystream uniformity, correlation breaking) assume orbits do
// not fall into a periodic window, so mu stays within [3.99, 4).
inline LogisticParams random_chaos(std::mt19937& rng,
                                   std::uint64_t discard = 256) {
  return {3.99 + 0.009999 * unit_draw(rng), 0.05 + 0.9 * unit_draw(rng),
          discard};
}

inline SrssKey random_key(std::mt19937& rng) {
  SrssKey key;
  key.chaos = random_chaos(rng);
  key.m1 = static_cast<std::uint8_t>(rng() & 0xff);
  key.m2 = static_cast<std::uint8_t>(rng() & 0xff);
  key.m3 = static_cast<std::uint8_t>(rng() & 0xff);
  return key;
}

struct Run {
  std::size_t start;
  std::size_t length;
  std::uint8_t value;
};

// Maximal runs of equal values in row-major order.
inline std::vector<Run> value_runs(std::span<const std::uint8_t> pixels) {
  std::vector<Run> runs;
  std::size_t k = 0;
  while (k < pixels.size()) {
    std::size_t end = k + 1;
    while (end < pixels.size() && pixels[end] == pixels[k]) ++end;
    runs.push_back({k, end - k, pixels[k]});
    k = end;
  }
  return runs;
}

}  // namespace srss::test
