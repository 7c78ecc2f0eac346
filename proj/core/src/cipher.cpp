#include "srss/cipher.hpp"

#include <charconv>
#include <cstdio>
#include <map>
#include <string>

namespace srss {

namespace {

const char* kKeyFields[] = {"mu", "x0", "discard", "m1", "m2", "m3", "sbox"};

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::uint8_t parse_hex_byte(std::string_view field, std::string_view value) {
  int acc = 0;
  if (value.empty() || value.size() > 2) {
    throw ParseError("key file: field '" + std::string(field) +
                     "' expects a hex byte, got '" + std::string(value) + "'");
  }
  for (char c : value) {
    const int d = hex_digit(c);
    if (d < 0) {
      throw ParseError("key file: field '" + std::string(field) +
                       "' expects a hex byte, got '" + std::string(value) + "'");
    }
    acc = acc * 16 + d;
  }
  return static_cast<std::uint8_t>(acc);
}

double parse_double(std::string_view field, std::string_view value) {
  double out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ParseError("key file: field '" + std::string(field) +
                     "' expects a real number, got '" + std::string(value) + "'");
  }
  return out;
}

std::uint64_t parse_uint(std::string_view field, std::string_view value) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ParseError("key file: field '" + std::string(field) +
                     "' expects a non-negative integer, got '" +
                     std::string(value) + "'");
  }
  return out;
}

std::string_view trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return s.substr(b, e - b);
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::uint8_t cross_apply(std::uint8_t sval, std::uint8_t trit,
                         const SrssKey& key) {
  switch (trit) {
    case 0:
      return static_cast<std::uint8_t>(sval ^ key.m1);
    case 1:
      return static_cast<std::uint8_t>(sval ^ key.m2);
    case 2:
      return static_cast<std::uint8_t>(sval ^ key.m3);
    default:
      throw InvalidTrit("cross_apply: trit must be 0, 1 or 2, got " +
                        std::to_string(trit));
  }
}

GrayImage srss_encrypt(const GrayImage& img, const SrssKey& key) {
  if (img.empty()) {
    throw EmptyImage("srss_encrypt: empty image");
  }
  const auto ops = generate_operation_sequence(key.chaos, img.pixel_count());
  GrayImage out(img.width(), img.height());
  const auto src = img.pixels();
  const auto dst = out.pixels();
  for (std::size_t k = 0; k < src.size(); ++k) {
    dst[k] = cross_apply(key.sbox.apply(src[k]), ops[k], key);
  }
  return out;
}

GrayImage srss_decrypt(const GrayImage& img, const SrssKey& key) {
  if (img.empty()) {
    throw EmptyImage("srss_decrypt: empty image");
  }
  const auto ops = generate_operation_sequence(key.chaos, img.pixel_count());
  const InverseSBox inv = invert(key.sbox);
  GrayImage out(img.width(), img.height());
  const auto src = img.pixels();
  const auto dst = out.pixels();
  for (std::size_t k = 0; k < src.size(); ++k) {
    // XOR is its own inverse, so reusing cross_apply undoes the modifier.
    dst[k] = inv.apply(cross_apply(src[k], ops[k], key));
  }
  return out;
}

SrssKeyFile parse_key_file(std::string_view text) {
  std::map<std::string, std::string, std::less<>> fields;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                       : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const std::size_t sep = line.find_first_of(" \t");
    if (sep == std::string_view::npos) {
      throw ParseError("key file: line '" + std::string(line) +
                       "' is not a 'field value' pair");
    }
    const std::string name(line.substr(0, sep));
    const std::string value(trim(line.substr(sep + 1)));
    if (value.empty()) {
      throw ParseError("key file: field '" + name + "' has no value");
    }
    if (!fields.emplace(name, value).second) {
      throw ParseError("key file: duplicate field '" + name + "'");
    }
  }

  for (const auto& [name, value] : fields) {
    bool known = false;
    for (const char* f : kKeyFields) known |= name == f;
    if (!known) {
      throw ParseError("key file: unknown field '" + name + "'");
    }
  }
  for (const char* f : kKeyFields) {
    if (!fields.contains(f)) {
      throw ParseError("key file: missing field '" + std::string(f) + "'");
    }
  }

  SrssKeyFile kf;
  kf.chaos.mu = parse_double("mu", fields["mu"]);
  kf.chaos.x0 = parse_double("x0", fields["x0"]);
  kf.chaos.discard = parse_uint("discard", fields["discard"]);
  kf.m1 = parse_hex_byte("m1", fields["m1"]);
  kf.m2 = parse_hex_byte("m2", fields["m2"]);
  kf.m3 = parse_hex_byte("m3", fields["m3"]);
  kf.sbox_ref = fields["sbox"];
  validate(kf.chaos);
  return kf;
}

std::string serialize_key_file(const SrssKeyFile& kf) {
  static constexpr char kHex[] = "0123456789abcdef";
  auto hex_byte = [](std::uint8_t v) {
    return std::string{kHex[v >> 4], kHex[v & 0x0f]};
  };
  std::string out;
  out += "mu " + format_double(kf.chaos.mu) + "\n";
  out += "x0 " + format_double(kf.chaos.x0) + "\n";
  out += "discard " + std::to_string(kf.chaos.discard) + "\n";
  out += "m1 " + hex_byte(kf.m1) + "\n";
  out += "m2 " + hex_byte(kf.m2) + "\n";
  out += "m3 " + hex_byte(kf.m3) + "\n";
  out += "sbox " + kf.sbox_ref + "\n";
  return out;
}

}  // namespace srss
