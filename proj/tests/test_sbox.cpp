#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>

#include "srss/sbox.hpp"

using namespace srss;

namespace {

std::array<std::uint8_t, 256> identity_table() {
  std::array<std::uint8_t, 256> t{};
  std::iota(t.begin(), t.end(), std::uint8_t{0});
  return t;
}

}  // namespace

TEST_CASE("a permutation table is accepted, a duplicate rejected") {
  CHECK_NOTHROW(SBox::from_table(identity_table()));

  auto dup = identity_table();
  dup[17] = 0;  // 0 now appears at positions 0 and 17
  try {
    SBox::from_table(dup);
    FAIL("expected NotBijective");
  } catch (const NotBijective& e) {
    CHECK(e.duplicate_value == 0);
  }
}

TEST_CASE("the embedded AES table is a permutation") {
  const SBox& aes = SBox::aes();
  // Independent distinctness check over the raw entries.
  bool seen[256] = {};
  for (std::uint8_t v : aes.table()) {
    REQUIRE_FALSE(seen[v]);
    seen[v] = true;
  }
}

TEST_CASE("grid lookup addresses row p, column q") {
  const SBox id = SBox::identity();
  CHECK(id.lookup(10, 11) == 171);
  CHECK(SBox::aes().lookup(0, 0) == 0x63);
  CHECK(SBox::aes().apply(0x00) == 0x63);
  CHECK_THROWS_AS(id.lookup(16, 0), IndexOutOfRange);
  CHECK_THROWS_AS(id.lookup(0, 16), IndexOutOfRange);
}

TEST_CASE("inversion round-trips every byte") {
  const InverseSBox id_inv = invert(SBox::identity());
  for (int v = 0; v < 256; ++v) {
    CHECK(id_inv.apply(static_cast<std::uint8_t>(v)) == v);
  }

  const SBox& aes = SBox::aes();
  const InverseSBox aes_inv = invert(aes);
  CHECK(aes_inv.apply(0x63) == 0x00);
  CHECK(aes_inv.apply(0x00) == 0x52);  // AES S(0x52) = 0x00
  for (int v = 0; v < 256; ++v) {
    const auto b = static_cast<std::uint8_t>(v);
    CHECK(aes_inv.apply(aes.apply(b)) == b);
    CHECK(aes.apply(aes_inv.apply(b)) == b);
  }
}

TEST_CASE("chaotic S-box generation is keyed and deterministic") {
  const LogisticParams key{3.99, 0.37, 200};
  const SBox a = generate_chaotic_sbox(key);
  const SBox b = generate_chaotic_sbox(key);
  CHECK(a == b);

  const SBox c = generate_chaotic_sbox({3.99, 0.38, 200});
  CHECK_FALSE(a == c);

  // Output is always a valid permutation (from_table re-validates).
  CHECK_NOTHROW(SBox::from_table(a.table()));
  CHECK_NOTHROW(SBox::from_table(c.table()));
}

TEST_CASE("default multi-S-box set holds three distinct tables") {
  const auto boxes = default_multi_sboxes();
  REQUIRE(boxes.size() == 3);
  CHECK(boxes[0] == SBox::aes());
  CHECK_FALSE(boxes[1] == boxes[0]);
  CHECK_FALSE(boxes[2] == boxes[0]);
  CHECK_FALSE(boxes[1] == boxes[2]);
}

TEST_CASE("serialization emits a 16x16 lowercase hex grid") {
  const std::string text = serialize_sbox(SBox::identity());
  CHECK(text.substr(0, 9) == "00 01 02 ");
  CHECK(text.back() == '\n');

  // 16 rows of 16 entries.
  int lines = 0;
  for (char ch : text) lines += ch == '\n';
  CHECK(lines == 16);
}

TEST_CASE("parse round-trips serialize") {
  const SBox& aes = SBox::aes();
  CHECK(parse_sbox(serialize_sbox(aes)) == aes);

  std::mt19937 rng(5);
  for (int trial = 0; trial < 8; ++trial) {
    const SBox box = generate_chaotic_sbox(
        {3.99, 0.05 + 0.9 * ((rng() >> 8) * 0x1.0p-24), 100});
    CHECK(parse_sbox(serialize_sbox(box)) == box);
  }
}

TEST_CASE("parser accepts comments and flexible whitespace") {
  std::string text = "# identity table\n";
  for (int v = 0; v < 256; ++v) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "%02x%c", v, v % 7 == 0 ? '\n' : ' ');
    text += buf;
  }
  text += "\n# trailing comment";
  CHECK(parse_sbox(text) == SBox::identity());
}

TEST_CASE("malformed S-box files are rejected") {
  std::string short_file;
  for (int v = 0; v < 255; ++v) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "%02x ", v);
    short_file += buf;
  }
  CHECK_THROWS_AS(parse_sbox(short_file), ParseError);
  CHECK_THROWS_AS(parse_sbox(short_file + "ff 00"), ParseError);
  CHECK_THROWS_AS(parse_sbox(short_file + "f"), ParseError);
  CHECK_THROWS_AS(parse_sbox(short_file + "zz"), ParseError);
  CHECK_THROWS_AS(parse_sbox(short_file + "00"), NotBijective);
  CHECK_THROWS_AS(parse_sbox(""), ParseError);
}
