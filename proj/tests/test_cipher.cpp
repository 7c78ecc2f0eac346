#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>

#include "srss/analysis.hpp"
#include "srss/cipher.hpp"
#include "srss/imgio.hpp"
#include "srss/substitution.hpp"
#include "support.hpp"

using namespace srss;

TEST_CASE("cross_apply XORs the modifier the trit selects") {
  SrssKey key;
  key.m1 = 0x0F;
  key.m2 = 0xF0;
  key.m3 = 0x00;
  CHECK(cross_apply(0x63, 0, key) == 0x6C);
  CHECK(cross_apply(0xFF, 2, key) == 0xFF);

  key.m2 = 0xA7;
  CHECK(cross_apply(0xA7, 1, key) == 0x00);
  CHECK_THROWS_AS(cross_apply(0x12, 3, key), InvalidTrit);
}

TEST_CASE("identity S-box with zero modifiers is the identity cipher") {
  std::mt19937 rng(31);
  const GrayImage img = test::random_image(rng, 23, 11);
  SrssKey key;
  key.chaos = {3.99, 0.4, 16};
  key.sbox = SBox::identity();
  CHECK(srss_encrypt(img, key) == img);
  CHECK(srss_decrypt(img, key) == img);
}

TEST_CASE("a flat image scatters into the three modifier values") {
  SrssKey key;
  key.chaos = {3.99, 0.37, 1000};
  key.m1 = 0x0F;
  key.m2 = 0xF0;
  key.m3 = 0xAA;

  const GrayImage zero = synth_constant(16, 16, 0x00);
  const GrayImage enc = srss_encrypt(zero, key);

  // AES maps 0x00 to 0x63; each pixel is 0x63 XOR a modifier, in
  // keystream order.
  const auto ops = generate_operation_sequence(key.chaos, zero.pixel_count());
  const std::uint8_t expect[3] = {0x63 ^ 0x0F, 0x63 ^ 0xF0, 0x63 ^ 0xAA};
  for (std::size_t k = 0; k < enc.pixel_count(); ++k) {
    REQUIRE(enc.pixels()[k] == expect[ops[k]]);
  }

  std::set<std::uint8_t> distinct(enc.pixels().begin(), enc.pixels().end());
  CHECK(distinct.size() >= 2);
  CHECK(distinct.size() <= 3);

  // The ciphertext histogram cannot be a permutation of the plaintext's:
  // one bin of 256 pixels became three smaller bins.
  auto plain_counts = histogram(zero).counts;
  auto cipher_counts = histogram(enc).counts;
  std::sort(plain_counts.begin(), plain_counts.end());
  std::sort(cipher_counts.begin(), cipher_counts.end());
  CHECK(plain_counts != cipher_counts);
}

TEST_CASE("encryption is the per-pixel composition of S-box and CROSS") {
  std::mt19937 rng(32);
  const GrayImage img = test::random_image(rng, 31, 17);
  const SrssKey key = test::random_key(rng);
  const GrayImage enc = srss_encrypt(img, key);

  const auto ops = generate_operation_sequence(key.chaos, img.pixel_count());
  for (std::size_t k = 0; k < img.pixel_count(); ++k) {
    const auto [p, q] = nibble_split(img.pixels()[k]);
    REQUIRE(enc.pixels()[k] ==
            cross_apply(key.sbox.lookup(p, q), ops[k], key));
  }
}

TEST_CASE("encrypt/decrypt round-trips for random keys and images") {
  std::mt19937 rng(33);
  for (int trial = 0; trial < 25; ++trial) {
    const GrayImage img = test::random_image(rng, 64, 64);
    SrssKey key = test::random_key(rng);
    if (trial % 5 == 0) {
      key.sbox = generate_chaotic_sbox(test::random_chaos(rng, 64));
    }
    CHECK(srss_decrypt(srss_encrypt(img, key), key) == img);
  }
}

TEST_CASE("identical keys produce identical ciphertexts") {
  std::mt19937 rng(34);
  const GrayImage img = test::random_image(rng, 40, 40);
  const SrssKey key = test::random_key(rng);
  CHECK(srss_encrypt(img, key) == srss_encrypt(img, key));
}

TEST_CASE("ciphertext of a high-entropy image stays near 8 bits") {
  const GrayImage img = synth_uniform_random(256, 256, 42);
  SrssKey key;
  key.chaos = {3.99, 0.37, 1000};
  key.m1 = 0x0F;
  key.m2 = 0xF0;
  key.m3 = 0xAA;
  CHECK(shannon_entropy(srss_encrypt(img, key)) >= 7.9);
}

TEST_CASE("a near-miss key fails to decrypt most pixels") {
  const GrayImage img = synth_disks(256, 256, 7);
  SrssKey key;
  key.chaos = {3.99, 0.4, 1000};
  key.m1 = 0x0F;
  key.m2 = 0xF0;
  key.m3 = 0xAA;
  const GrayImage enc = srss_encrypt(img, key);

  SrssKey wrong = key;
  wrong.chaos.x0 = 0.4000000001;
  const GrayImage dec = srss_decrypt(enc, wrong);

  std::size_t differing = 0;
  for (std::size_t k = 0; k < img.pixel_count(); ++k) {
    differing += img.pixels()[k] != dec.pixels()[k];
  }
  CHECK(static_cast<double>(differing) / img.pixel_count() >= 0.30);
}

TEST_CASE("cipher rejects empty images") {
  const SrssKey key;
  CHECK_THROWS_AS(srss_encrypt(GrayImage{}, key), EmptyImage);
  CHECK_THROWS_AS(srss_decrypt(GrayImage{}, key), EmptyImage);
}

TEST_CASE("key files round-trip") {
  SrssKeyFile kf;
  kf.chaos = {3.912345678901234, 0.070000000000000007, 4096};
  kf.m1 = 0x0F;
  kf.m2 = 0xF0;
  kf.m3 = 0xAA;
  kf.sbox_ref = "boxes/custom.sbox";

  const SrssKeyFile back = parse_key_file(serialize_key_file(kf));
  CHECK(back.chaos.mu == kf.chaos.mu);
  CHECK(back.chaos.x0 == kf.chaos.x0);
  CHECK(back.chaos.discard == kf.chaos.discard);
  CHECK(back.m1 == kf.m1);
  CHECK(back.m2 == kf.m2);
  CHECK(back.m3 == kf.m3);
  CHECK(back.sbox_ref == kf.sbox_ref);
}

TEST_CASE("key files accept comments and reject malformed input") {
  const std::string good =
      "# test key\n"
      "mu 3.99\n"
      "x0 0.37   # initial condition\n"
      "discard 1000\n"
      "m1 0f\n"
      "m2 f0\n"
      "m3 aa\n"
      "sbox aes\n";
  const SrssKeyFile kf = parse_key_file(good);
  CHECK(kf.chaos.mu == 3.99);
  CHECK(kf.chaos.x0 == 0.37);
  CHECK(kf.chaos.discard == 1000);
  CHECK(kf.m1 == 0x0F);
  CHECK(kf.m2 == 0xF0);
  CHECK(kf.m3 == 0xAA);
  CHECK(kf.sbox_ref == "aes");

  CHECK_THROWS_AS(parse_key_file("mu 3.99\n"), ParseError);  // missing fields
  CHECK_THROWS_AS(parse_key_file(good + "mu 3.9\n"), ParseError);  // duplicate
  CHECK_THROWS_AS(parse_key_file(good + "shift 3\n"), ParseError);  // unknown
  CHECK_THROWS_AS(parse_key_file("mu\n"), ParseError);  // no value

  std::string bad_hex = good;
  bad_hex.replace(bad_hex.find("m1 0f"), 5, "m1 0z");
  CHECK_THROWS_AS(parse_key_file(bad_hex), ParseError);

  std::string bad_mu = good;
  bad_mu.replace(bad_mu.find("mu 3.99"), 7, "mu 4.20");
  CHECK_THROWS_AS(parse_key_file(bad_mu), InvalidKey);
}
