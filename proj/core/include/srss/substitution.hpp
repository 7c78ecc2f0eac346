#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "srss/chaos.hpp"
#include "srss/image.hpp"
#include "srss/sbox.hpp"

namespace srss {

/// Splits a byte into (high nibble, low nibble); 16*p + q == v.
std::pair<std::uint8_t, std::uint8_t> nibble_split(std::uint8_t v);

/// Classical single-table substitution: every pixel is replaced by the
/// S-box entry addressed by its nibbles. Bijective on pixel values, so
/// the ciphertext histogram is a bin permutation of the plaintext's.
GrayImage encrypt_single_sbox(const GrayImage& img, const SBox& sbox);
GrayImage decrypt_single_sbox(const GrayImage& img, const SBox& sbox);

/// Chaotic multi-table substitution: pixel k is substituted through
/// sboxes[s_k], where s_k is the logistic keystream quantized modulo the
/// table count.
GrayImage encrypt_multi_sbox(const GrayImage& img, std::span<const SBox> sboxes,
                             const LogisticParams& params);
GrayImage decrypt_multi_sbox(const GrayImage& img, std::span<const SBox> sboxes,
                             const LogisticParams& params);

/// Iterated substitution. Each round applies one chaotically selected
/// table to the whole image, so every round is a bijection on pixel
/// values and Shannon entropy is invariant across rounds. The keystream
/// advances one selector per round; round r consumes selector index r.
/// Returns every round's output, in order.
std::vector<GrayImage> encrypt_multi_round(const GrayImage& img,
                                           std::span<const SBox> sboxes,
                                           std::size_t rounds,
                                           const LogisticParams& params);
GrayImage decrypt_multi_round(const GrayImage& img, std::span<const SBox> sboxes,
                              std::size_t rounds, const LogisticParams& params);

}  // namespace srss
