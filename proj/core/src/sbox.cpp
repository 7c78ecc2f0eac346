#include "srss/sbox.hpp"

#include <algorithm>
#include <bitset>
#include <cctype>
#include <cmath>
#include <numeric>
#include <utility>

namespace srss {

namespace {

// FIPS-197 forward S-box.
constexpr std::array<std::uint8_t, 256> kAesTable = {
    0x63, 0x7c, 0x77, 0x7b, 0xf2, 0x6b, 0x6f, 0xc5, 0x30, 0x01, 0x67, 0x2b,
    0xfe, 0xd7, 0xab, 0x76, 0xca, 0x82, 0xc9, 0x7d, 0xfa, 0x59, 0x47, 0xf0,
    0xad, 0xd4, 0xa2, 0xaf, 0x9c, 0xa4, 0x72, 0xc0, 0xb7, 0xfd, 0x93, 0x26,
    0x36, 0x3f, 0xf7, 0xcc, 0x34, 0xa5, 0xe5, 0xf1, 0x71, 0xd8, 0x31, 0x15,
    0x04, 0xc7, 0x23, 0xc3, 0x18, 0x96, 0x05, 0x9a, 0x07, 0x12, 0x80, 0xe2,
    0xeb, 0x27, 0xb2, 0x75, 0x09, 0x83, 0x2c, 0x1a, 0x1b, 0x6e, 0x5a, 0xa0,
    0x52, 0x3b, 0xd6, 0xb3, 0x29, 0xe3, 0x2f, 0x84, 0x53, 0xd1, 0x00, 0xed,
    0x20, 0xfc, 0xb1, 0x5b, 0x6a, 0xcb, 0xbe, 0x39, 0x4a, 0x4c, 0x58, 0xcf,
    0xd0, 0xef, 0xaa, 0xfb, 0x43, 0x4d, 0x33, 0x85, 0x45, 0xf9, 0x02, 0x7f,
    0x50, 0x3c, 0x9f, 0xa8, 0x51, 0xa3, 0x40, 0x8f, 0x92, 0x9d, 0x38, 0xf5,
    0xbc, 0xb6, 0xda, 0x21, 0x10, 0xff, 0xf3, 0xd2, 0xcd, 0x0c, 0x13, 0xec,
    0x5f, 0x97, 0x44, 0x17, 0xc4, 0xa7, 0x7e, 0x3d, 0x64, 0x5d, 0x19, 0x73,
    0x60, 0x81, 0x4f, 0xdc, 0x22, 0x2a, 0x90, 0x88, 0x46, 0xee, 0xb8, 0x14,
    0xde, 0x5e, 0x0b, 0xdb, 0xe0, 0x32, 0x3a, 0x0a, 0x49, 0x06, 0x24, 0x5c,
    0xc2, 0xd3, 0xac, 0x62, 0x91, 0x95, 0xe4, 0x79, 0xe7, 0xc8, 0x37, 0x6d,
    0x8d, 0xd5, 0x4e, 0xa9, 0x6c, 0x56, 0xf4, 0xea, 0x65, 0x7a, 0xae, 0x08,
    0xba, 0x78, 0x25, 0x2e, 0x1c, 0xa6, 0xb4, 0xc6, 0xe8, 0xdd, 0x74, 0x1f,
    0x4b, 0xbd, 0x8b, 0x8a, 0x70, 0x3e, 0xb5, 0x66, 0x48, 0x03, 0xf6, 0x0e,
    0x61, 0x35, 0x57, 0xb9, 0x86, 0xc1, 0x1d, 0x9e, 0xe1, 0xf8, 0x98, 0x11,
    0x69, 0xd9, 0x8e, 0x94, 0x9b, 0x1e, 0x87, 0xe9, 0xce, 0x55, 0x28, 0xdf,
    0x8c, 0xa1, 0x89, 0x0d, 0xbf, 0xe6, 0x42, 0x68, 0x41, 0x99, 0x2d, 0x0f,
    0xb0, 0x54, 0xbb, 0x16};

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

SBox SBox::from_table(std::span<const std::uint8_t, 256> table) {
  std::bitset<256> seen;
  for (std::uint8_t v : table) {
    if (seen[v]) {
      throw NotBijective(v, "S-box is not bijective: value " +
                                std::to_string(v) + " appears twice");
    }
    seen[v] = true;
  }
  SBox box;
  std::copy(table.begin(), table.end(), box.table_.begin());
  return box;
}

SBox SBox::identity() {
  SBox box;
  std::iota(box.table_.begin(), box.table_.end(), std::uint8_t{0});
  return box;
}

const SBox& SBox::aes() {
  static const SBox box = from_table(kAesTable);
  return box;
}

std::uint8_t SBox::lookup(std::uint32_t p, std::uint32_t q) const {
  if (p > 15 || q > 15) {
    throw IndexOutOfRange("S-box index (" + std::to_string(p) + ", " +
                          std::to_string(q) + ") outside the 16x16 grid");
  }
  return table_[p * 16 + q];
}

InverseSBox invert(const SBox& sbox) {
  InverseSBox inv;
  const auto table = sbox.table();
  for (std::size_t i = 0; i < 256; ++i) {
    inv.table_[table[i]] = static_cast<std::uint8_t>(i);
  }
  return inv;
}

SBox generate_chaotic_sbox(const LogisticParams& params) {
  // One keystream value per swap, quantized with the shrinking modulus the
  // shuffle position requires.
  const std::vector<double> stream = iterate_logistic(params, 255);

  std::array<std::uint8_t, 256> table;
  std::iota(table.begin(), table.end(), std::uint8_t{0});
  for (std::uint32_t i = 255; i >= 1; --i) {
    const double x = stream[255 - i];
    const auto j = static_cast<std::uint32_t>(
        std::llround(x * 1000.0) % static_cast<long long>(i + 1));
    std::swap(table[i], table[j]);
  }
  return SBox::from_table(table);
}

std::vector<SBox> default_multi_sboxes() {
  return {SBox::aes(), generate_chaotic_sbox(kDefaultSboxKeyA),
          generate_chaotic_sbox(kDefaultSboxKeyB)};
}

SBox parse_sbox(std::string_view text) {
  std::array<std::uint8_t, 256> table{};
  std::size_t count = 0;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const char c = text[i];
    if (c == '#') {
      while (i < n && text[i] != '\n') ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < n && !std::isspace(static_cast<unsigned char>(text[i])) &&
           text[i] != '#') {
      ++i;
    }
    const std::string_view token = text.substr(start, i - start);
    if (token.size() != 2 || hex_digit(token[0]) < 0 || hex_digit(token[1]) < 0) {
      throw ParseError("S-box file: malformed byte token '" +
                       std::string(token) + "'");
    }
    if (count == 256) {
      throw ParseError("S-box file: more than 256 entries");
    }
    table[count++] =
        static_cast<std::uint8_t>(hex_digit(token[0]) * 16 + hex_digit(token[1]));
  }
  if (count != 256) {
    throw ParseError("S-box file: expected 256 entries, found " +
                     std::to_string(count));
  }
  return SBox::from_table(table);
}

std::string serialize_sbox(const SBox& sbox) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(16 * 48);
  const auto table = sbox.table();
  for (std::size_t p = 0; p < 16; ++p) {
    for (std::size_t q = 0; q < 16; ++q) {
      const std::uint8_t v = table[p * 16 + q];
      out.push_back(kHex[v >> 4]);
      out.push_back(kHex[v & 0x0f]);
      out.push_back(q == 15 ? '\n' : ' ');
    }
  }
  return out;
}

}  // namespace srss
