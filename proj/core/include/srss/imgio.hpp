#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "srss/image.hpp"

namespace srss {

enum class PgmVariant { ascii, binary };  // P2 / P5

/// Reads a PGM image (P2 or P5) with maxval <= 255. '#' comments are
/// accepted in the header. Throws ParseError on malformed input.
GrayImage read_pgm(std::span<const std::uint8_t> bytes);

/// Writes a PGM image; the emitted maxval is always 255.
std::vector<std::uint8_t> write_pgm(const GrayImage& img,
                                    PgmVariant variant = PgmVariant::binary);

GrayImage load_pgm(const std::filesystem::path& path);
void save_pgm(const std::filesystem::path& path, const GrayImage& img,
              PgmVariant variant = PgmVariant::binary);

enum class SynthKind { constant, checkerboard, gradient, disks, uniform_random };

/// Parameters of a synthetic test image. `value` is the constant fill,
/// `cell` the checkerboard cell edge; both are ignored by other kinds.
struct SynthSpec {
  SynthKind kind = SynthKind::disks;
  std::uint32_t width = 256;
  std::uint32_t height = 256;
  std::uint64_t seed = 0;
  std::uint8_t value = 0;
  std::uint32_t cell = 8;
};

/// Deterministic synthetic images. The disks kind renders coin-like
/// filled circles from a small gray palette on a flat background: large
/// flat regions, sharp edges and at most 7 distinct values, so its
/// entropy stays below 3 bits.
GrayImage synth(const SynthSpec& spec);

GrayImage synth_constant(std::uint32_t width, std::uint32_t height,
                         std::uint8_t value);
GrayImage synth_checkerboard(std::uint32_t width, std::uint32_t height,
                             std::uint32_t cell);
GrayImage synth_gradient(std::uint32_t width, std::uint32_t height);
GrayImage synth_disks(std::uint32_t width, std::uint32_t height,
                      std::uint64_t seed);
GrayImage synth_uniform_random(std::uint32_t width, std::uint32_t height,
                               std::uint64_t seed);

/// Parses a kind string as used by the CLI: "disks", "gradient",
/// "uniform-random", "constant(<value>)" or "checkerboard(<cell>)";
/// the parameter is optional. Fills only kind/value/cell of the result.
SynthSpec parse_synth_kind(std::string_view kind);

}  // namespace srss
