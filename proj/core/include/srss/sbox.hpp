#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "srss/chaos.hpp"
#include "srss/errors.hpp"

namespace srss {

/// Bijective byte substitution table addressed as a 16x16 grid: the entry
/// at row p, column q substitutes the byte with high nibble p and low
/// nibble q. Construction always verifies bijectivity, so a held SBox is
/// guaranteed to be a permutation of 0..255.
class SBox {
 public:
  /// Validates that `table` is a permutation of 0..255 and wraps it.
  /// Throws NotBijective (carrying the first duplicated value) otherwise.
  static SBox from_table(std::span<const std::uint8_t, 256> table);

  /// The identity permutation.
  static SBox identity();

  /// The published AES forward S-box.
  static const SBox& aes();

  /// Grid access; p is the row, q the column. Throws IndexOutOfRange.
  std::uint8_t lookup(std::uint32_t p, std::uint32_t q) const;

  /// Substitutes a whole byte: equivalent to lookup on its nibbles.
  std::uint8_t apply(std::uint8_t v) const { return table_[v]; }

  std::span<const std::uint8_t, 256> table() const { return table_; }

  bool operator==(const SBox&) const = default;

 private:
  SBox() = default;
  std::array<std::uint8_t, 256> table_{};
};

/// Inverse lookup table of an SBox: apply(v) recovers the byte whose
/// substitution produced v.
class InverseSBox {
 public:
  std::uint8_t apply(std::uint8_t v) const { return table_[v]; }
  std::span<const std::uint8_t, 256> table() const { return table_; }

 private:
  friend InverseSBox invert(const SBox& sbox);
  InverseSBox() = default;
  std::array<std::uint8_t, 256> table_{};
};

InverseSBox invert(const SBox& sbox);

/// Keyed permutation of 0..255: a Fisher-Yates shuffle whose swap index
/// for position i is the logistic keystream value quantized modulo i+1.
SBox generate_chaotic_sbox(const LogisticParams& params);

/// Documented keys of the two chaotic tables in default_multi_sboxes().
inline constexpr LogisticParams kDefaultSboxKeyA{3.99, 0.314159, 1000};
inline constexpr LogisticParams kDefaultSboxKeyB{3.99, 0.271828, 1000};

/// Default table set for multi-S-box substitution: AES plus two chaotic
/// tables generated from the fixed keys above.
std::vector<SBox> default_multi_sboxes();

/// Text format: 16 rows of 16 two-digit hex bytes, any whitespace
/// separation; lines starting with '#' are comments. serialize_sbox
/// emits lowercase hex, one grid row per line.
SBox parse_sbox(std::string_view text);
std::string serialize_sbox(const SBox& sbox);

}  // namespace srss
