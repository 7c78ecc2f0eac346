#include "srss/imgio.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <random>
#include <string>

namespace srss {

namespace {

// Header tokenizer: whitespace separates tokens, '#' starts a comment
// that runs to the end of the line.
class Scanner {
 public:
  explicit Scanner(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const char c = static_cast<char>(bytes_[pos_]);
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::string next_token(const char* what) {
    skip_space_and_comments();
    if (pos_ >= bytes_.size()) {
      throw ParseError(std::string("PGM: missing ") + what);
    }
    std::string token;
    while (pos_ < bytes_.size()) {
      const char c = static_cast<char>(bytes_[pos_]);
      if (std::isspace(static_cast<unsigned char>(c)) || c == '#') break;
      token.push_back(c);
      ++pos_;
    }
    return token;
  }

  std::uint32_t next_uint(const char* what, std::uint32_t max) {
    const std::string token = next_token(what);
    std::uint32_t v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size() || v > max) {
      throw ParseError(std::string("PGM: bad ") + what + " '" + token + "'");
    }
    return v;
  }

  // P5 requires exactly one whitespace byte between maxval and the raster.
  void expect_single_space() {
    if (pos_ >= bytes_.size() ||
        !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
      throw ParseError("PGM: expected whitespace before binary raster");
    }
    ++pos_;
  }

  std::size_t pos() const { return pos_; }
  std::size_t remaining() const { return bytes_.size() - pos_; }
  bool at_end() {
    skip_space_and_comments();
    return pos_ >= bytes_.size();
  }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

GrayImage read_pgm(std::span<const std::uint8_t> bytes) {
  Scanner scan(bytes);
  const std::string magic = scan.next_token("magic number");
  if (magic != "P2" && magic != "P5") {
    throw ParseError("PGM: unsupported magic '" + magic + "'");
  }
  const std::uint32_t width = scan.next_uint("width", 1u << 20);
  const std::uint32_t height = scan.next_uint("height", 1u << 20);
  if (width == 0 || height == 0) {
    throw ParseError("PGM: zero image dimension");
  }
  const std::uint32_t maxval = scan.next_uint("maxval", 65535);
  if (maxval == 0 || maxval > 255) {
    throw ParseError("PGM: maxval " + std::to_string(maxval) +
                     " unsupported (need 1..255)");
  }

  const std::size_t count = static_cast<std::size_t>(width) * height;
  std::vector<std::uint8_t> pixels(count);

  if (magic == "P5") {
    scan.expect_single_space();
    if (scan.remaining() < count) {
      throw ParseError("PGM: truncated binary raster (" +
                       std::to_string(scan.remaining()) + " of " +
                       std::to_string(count) + " bytes)");
    }
    if (scan.remaining() > count) {
      throw ParseError("PGM: trailing data after binary raster");
    }
    std::copy_n(bytes.begin() + scan.pos(), count, pixels.begin());
    for (std::uint8_t v : pixels) {
      if (v > maxval) {
        throw ParseError("PGM: sample " + std::to_string(v) +
                         " exceeds maxval " + std::to_string(maxval));
      }
    }
  } else {
    for (std::size_t k = 0; k < count; ++k) {
      pixels[k] = static_cast<std::uint8_t>(
          scan.next_uint("sample", maxval));
    }
    if (!scan.at_end()) {
      throw ParseError("PGM: trailing data after ASCII raster");
    }
  }
  return GrayImage(width, height, std::move(pixels));
}

std::vector<std::uint8_t> write_pgm(const GrayImage& img, PgmVariant variant) {
  if (img.empty()) {
    throw EmptyImage("write_pgm: empty image");
  }
  std::string header = variant == PgmVariant::binary ? "P5" : "P2";
  header += "\n" + std::to_string(img.width()) + " " +
            std::to_string(img.height()) + "\n255\n";

  std::vector<std::uint8_t> out(header.begin(), header.end());
  if (variant == PgmVariant::binary) {
    out.insert(out.end(), img.pixels().begin(), img.pixels().end());
    return out;
  }

  // ASCII raster, keeping lines within the customary 70 columns.
  std::string line;
  for (std::uint8_t v : img.pixels()) {
    const std::string sample = std::to_string(v);
    if (!line.empty() && line.size() + 1 + sample.size() > 70) {
      line += "\n";
      out.insert(out.end(), line.begin(), line.end());
      line.clear();
    }
    if (!line.empty()) line += " ";
    line += sample;
  }
  if (!line.empty()) {
    line += "\n";
    out.insert(out.end(), line.begin(), line.end());
  }
  return out;
}

GrayImage load_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open '" + path.string() + "' for reading");
  }
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return read_pgm(bytes);
}

void save_pgm(const std::filesystem::path& path, const GrayImage& img,
              PgmVariant variant) {
  const std::vector<std::uint8_t> bytes = write_pgm(img, variant);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw ParseError("cannot open '" + path.string() + "' for writing");
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw ParseError("failed writing '" + path.string() + "'");
  }
}

namespace {

void require_dims(std::uint32_t width, std::uint32_t height) {
  if (width == 0 || height == 0) {
    throw InvalidParams("synth: image dimensions must be positive");
  }
}

}  // namespace

GrayImage synth_constant(std::uint32_t width, std::uint32_t height,
                         std::uint8_t value) {
  require_dims(width, height);
  GrayImage img(width, height);
  std::ranges::fill(img.pixels(), value);
  return img;
}

GrayImage synth_checkerboard(std::uint32_t width, std::uint32_t height,
                             std::uint32_t cell) {
  require_dims(width, height);
  if (cell == 0) {
    throw InvalidParams("synth: checkerboard cell must be positive");
  }
  GrayImage img(width, height);
  for (std::uint32_t r = 0; r < height; ++r) {
    for (std::uint32_t c = 0; c < width; ++c) {
      img.at(r, c) = ((r / cell + c / cell) % 2 == 0) ? 0 : 255;
    }
  }
  return img;
}

GrayImage synth_gradient(std::uint32_t width, std::uint32_t height) {
  require_dims(width, height);
  GrayImage img(width, height);
  for (std::uint32_t r = 0; r < height; ++r) {
    for (std::uint32_t c = 0; c < width; ++c) {
      img.at(r, c) = width == 1
                         ? 0
                         : static_cast<std::uint8_t>(
                               (static_cast<std::uint64_t>(c) * 255) / (width - 1));
    }
  }
  return img;
}

GrayImage synth_disks(std::uint32_t width, std::uint32_t height,
                      std::uint64_t seed) {
  require_dims(width, height);
  // mt19937 with explicit modulo keeps the output identical everywhere;
  // std::uniform_int_distribution is implementation-defined.
  std::mt19937 rng(static_cast<std::uint32_t>(seed ^ (seed >> 32)));
  constexpr std::uint8_t kBackground = 32;
  constexpr std::uint8_t kPalette[] = {96, 128, 160, 192, 224, 255};

  GrayImage img(width, height);
  std::ranges::fill(img.pixels(), kBackground);

  const std::uint32_t ndisks = std::max<std::uint32_t>(
      3, static_cast<std::uint32_t>(img.pixel_count() / 8192));
  const std::uint32_t short_side = std::min(width, height);
  const std::uint32_t rlo = std::max<std::uint32_t>(1, short_side / 10);
  const std::uint32_t rhi = std::max<std::uint32_t>(rlo, short_side / 5);

  for (std::uint32_t d = 0; d < ndisks; ++d) {
    const std::int64_t cx = rng() % width;
    const std::int64_t cy = rng() % height;
    const std::int64_t radius = rlo + rng() % (rhi - rlo + 1);
    const std::uint8_t value = kPalette[rng() % std::size(kPalette)];
    const std::int64_t r2 = radius * radius;
    const std::int64_t y0 = std::max<std::int64_t>(0, cy - radius);
    const std::int64_t y1 = std::min<std::int64_t>(height - 1, cy + radius);
    const std::int64_t x0 = std::max<std::int64_t>(0, cx - radius);
    const std::int64_t x1 = std::min<std::int64_t>(width - 1, cx + radius);
    for (std::int64_t y = y0; y <= y1; ++y) {
      for (std::int64_t x = x0; x <= x1; ++x) {
        if ((x - cx) * (x - cx) + (y - cy) * (y - cy) <= r2) {
          img.at(static_cast<std::uint32_t>(y), static_cast<std::uint32_t>(x)) = value;
        }
      }
    }
  }
  return img;
}

GrayImage synth_uniform_random(std::uint32_t width, std::uint32_t height,
                               std::uint64_t seed) {
  require_dims(width, height);
  std::mt19937 rng(static_cast<std::uint32_t>(seed ^ (seed >> 32)));
  GrayImage img(width, height);
  for (std::uint8_t& v : img.pixels()) {
    v = static_cast<std::uint8_t>(rng() & 0xff);
  }
  return img;
}

GrayImage synth(const SynthSpec& spec) {
  switch (spec.kind) {
    case SynthKind::constant:
      return synth_constant(spec.width, spec.height, spec.value);
    case SynthKind::checkerboard:
      return synth_checkerboard(spec.width, spec.height, spec.cell);
    case SynthKind::gradient:
      return synth_gradient(spec.width, spec.height);
    case SynthKind::disks:
      return synth_disks(spec.width, spec.height, spec.seed);
    case SynthKind::uniform_random:
      return synth_uniform_random(spec.width, spec.height, spec.seed);
  }
  throw InvalidParams("synth: unknown kind");
}

SynthSpec parse_synth_kind(std::string_view kind) {
  std::string_view name = kind;
  std::string_view arg;
  if (const std::size_t open = kind.find('('); open != std::string_view::npos) {
    if (kind.back() != ')') {
      throw InvalidParams("synth kind '" + std::string(kind) +
                          "': unbalanced parameter");
    }
    name = kind.substr(0, open);
    arg = kind.substr(open + 1, kind.size() - open - 2);
  }

  auto parse_arg = [&](std::uint32_t max, std::uint32_t fallback) {
    if (arg.empty()) return fallback;
    std::uint32_t v = 0;
    const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), v);
    if (ec != std::errc{} || ptr != arg.data() + arg.size() || v > max) {
      throw InvalidParams("synth kind '" + std::string(kind) +
                          "': bad parameter '" + std::string(arg) + "'");
    }
    return v;
  };

  SynthSpec spec;
  if (name == "constant") {
    spec.kind = SynthKind::constant;
    spec.value = static_cast<std::uint8_t>(parse_arg(255, 0));
  } else if (name == "checkerboard") {
    spec.kind = SynthKind::checkerboard;
    spec.cell = parse_arg(1u << 16, 8);
    if (spec.cell == 0) {
      throw InvalidParams("synth: checkerboard cell must be positive");
    }
  } else if (name == "gradient") {
    spec.kind = SynthKind::gradient;
  } else if (name == "disks") {
    spec.kind = SynthKind::disks;
  } else if (name == "uniform-random" || name == "random") {
    spec.kind = SynthKind::uniform_random;
  } else {
    throw InvalidParams("synth: unknown kind '" + std::string(kind) + "'");
  }
  if (!arg.empty() && name != "constant" && name != "checkerboard") {
    throw InvalidParams("synth kind '" + std::string(name) +
                        "' takes no parameter");
  }
  return spec;
}

}  // namespace srss
