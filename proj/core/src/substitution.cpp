#include "srss/substitution.hpp"

#include <string>

namespace srss {

namespace {

void require_nonempty(const GrayImage& img) {
  if (img.empty()) {
    throw EmptyImage("substitution: empty image");
  }
}

void require_sboxes(std::span<const SBox> sboxes) {
  if (sboxes.empty()) {
    throw InvalidParams("substitution: at least one S-box is required");
  }
}

}  // namespace

std::pair<std::uint8_t, std::uint8_t> nibble_split(std::uint8_t v) {
  return {static_cast<std::uint8_t>(v >> 4), static_cast<std::uint8_t>(v & 0x0f)};
}

GrayImage encrypt_single_sbox(const GrayImage& img, const SBox& sbox) {
  require_nonempty(img);
  GrayImage out(img.width(), img.height());
  const auto src = img.pixels();
  const auto dst = out.pixels();
  for (std::size_t k = 0; k < src.size(); ++k) {
    const auto [p, q] = nibble_split(src[k]);
    dst[k] = sbox.lookup(p, q);
  }
  return out;
}

GrayImage decrypt_single_sbox(const GrayImage& img, const SBox& sbox) {
  require_nonempty(img);
  const InverseSBox inv = invert(sbox);
  GrayImage out(img.width(), img.height());
  const auto src = img.pixels();
  const auto dst = out.pixels();
  for (std::size_t k = 0; k < src.size(); ++k) {
    dst[k] = inv.apply(src[k]);
  }
  return out;
}

GrayImage encrypt_multi_sbox(const GrayImage& img, std::span<const SBox> sboxes,
                             const LogisticParams& params) {
  require_nonempty(img);
  require_sboxes(sboxes);
  const auto selector = generate_index_sequence(
      params, img.pixel_count(), static_cast<std::uint32_t>(sboxes.size()));
  GrayImage out(img.width(), img.height());
  const auto src = img.pixels();
  const auto dst = out.pixels();
  for (std::size_t k = 0; k < src.size(); ++k) {
    dst[k] = sboxes[selector[k]].apply(src[k]);
  }
  return out;
}

GrayImage decrypt_multi_sbox(const GrayImage& img, std::span<const SBox> sboxes,
                             const LogisticParams& params) {
  require_nonempty(img);
  require_sboxes(sboxes);
  const auto selector = generate_index_sequence(
      params, img.pixel_count(), static_cast<std::uint32_t>(sboxes.size()));
  std::vector<InverseSBox> inverses;
  inverses.reserve(sboxes.size());
  for (const SBox& box : sboxes) {
    inverses.push_back(invert(box));
  }
  GrayImage out(img.width(), img.height());
  const auto src = img.pixels();
  const auto dst = out.pixels();
  for (std::size_t k = 0; k < src.size(); ++k) {
    dst[k] = inverses[selector[k]].apply(src[k]);
  }
  return out;
}

std::vector<GrayImage> encrypt_multi_round(const GrayImage& img,
                                           std::span<const SBox> sboxes,
                                           std::size_t rounds,
                                           const LogisticParams& params) {
  require_nonempty(img);
  require_sboxes(sboxes);
  if (rounds == 0) {
    throw InvalidParams("encrypt_multi_round: rounds must be at least 1");
  }
  const auto selector = generate_index_sequence(
      params, rounds, static_cast<std::uint32_t>(sboxes.size()));

  std::vector<GrayImage> out;
  out.reserve(rounds);
  const GrayImage* current = &img;
  for (std::size_t r = 0; r < rounds; ++r) {
    out.push_back(encrypt_single_sbox(*current, sboxes[selector[r]]));
    current = &out.back();
  }
  return out;
}

GrayImage decrypt_multi_round(const GrayImage& img, std::span<const SBox> sboxes,
                              std::size_t rounds, const LogisticParams& params) {
  require_nonempty(img);
  require_sboxes(sboxes);
  if (rounds == 0) {
    throw InvalidParams("decrypt_multi_round: rounds must be at least 1");
  }
  const auto selector = generate_index_sequence(
      params, rounds, static_cast<std::uint32_t>(sboxes.size()));

  GrayImage current = img;
  for (std::size_t r = rounds; r-- > 0;) {
    current = decrypt_single_sbox(current, sboxes[selector[r]]);
  }
  return current;
}

}  // namespace srss
