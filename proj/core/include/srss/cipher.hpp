#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "srss/chaos.hpp"
#include "srss/image.hpp"
#include "srss/sbox.hpp"

namespace srss {

/// Full SRSS secret key: the logistic-map parameters that drive CROSS,
/// the three modifier bytes, and the substitution table. Equal modifiers
/// are legal but degrade the scheme to plain substitution plus XOR; the
/// CLI warns about them.
struct SrssKey {
  LogisticParams chaos;
  std::uint8_t m1 = 0;
  std::uint8_t m2 = 0;
  std::uint8_t m3 = 0;
  SBox sbox = SBox::aes();
};

/// CROSS operation: the trit selects which modifier byte is XORed onto
/// the substituted value (0 -> m1, 1 -> m2, 2 -> m3).
std::uint8_t cross_apply(std::uint8_t sval, std::uint8_t trit,
                         const SrssKey& key);

/// Single-round single-S-box encryption: every pixel is substituted once
/// through key.sbox, then transformed by the CROSS operation its
/// keystream trit selects.
GrayImage srss_encrypt(const GrayImage& img, const SrssKey& key);

/// Exact inverse: regenerates the trit stream, undoes the XOR, then maps
/// through the inverse S-box.
GrayImage srss_decrypt(const GrayImage& img, const SrssKey& key);

/// Key file contents. The S-box is referenced by name: "aes" or a path
/// to an S-box file; resolution to an SBox is the caller's job.
struct SrssKeyFile {
  LogisticParams chaos;
  std::uint8_t m1 = 0;
  std::uint8_t m2 = 0;
  std::uint8_t m3 = 0;
  std::string sbox_ref = "aes";
};

/// Plain-text key format: one `field value` pair per line, '#' comments.
/// Fields: mu, x0, discard, m1, m2, m3 (two hex digits each), sbox.
/// All fields are required; duplicates and unknown fields are rejected.
SrssKeyFile parse_key_file(std::string_view text);
std::string serialize_key_file(const SrssKeyFile& kf);

}  // namespace srss
