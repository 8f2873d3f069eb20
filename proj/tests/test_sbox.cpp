#include "marvin/sbox.hpp"

#include <array>
#include <cstdint>

#include "support/check.hpp"
#include "support/rng.hpp"

using marvin::SBoxTable;
using marvin::State256;

namespace {

void test_circuit_values() {
  CHECK_EQ(marvin::sbox_circuit(0x0), 0x0);
  CHECK_EQ(marvin::sbox_circuit(0x8), 0x4);
  CHECK_EQ(marvin::sbox_circuit(0x4), 0x8);
  CHECK_EQ(marvin::sbox_circuit(0xF), 0xA);
  CHECK_EQ(marvin::sbox_circuit(0xA), 0xF);
}

void test_table_matches_circuit() {
  const SBoxTable sbox = SBoxTable::build();
  for (unsigned x = 0; x < 16; ++x) {
    CHECK_EQ(sbox[x], marvin::sbox_circuit(static_cast<std::uint8_t>(x)));
    CHECK_EQ(sbox[x], marvin::kSBoxTable[x]);
  }
}

void test_involution_and_bijection() {
  const SBoxTable sbox = SBoxTable::build();
  std::array<bool, 16> seen{};
  for (unsigned x = 0; x < 16; ++x) {
    CHECK_EQ(sbox[sbox[x]], x);
    CHECK(!seen[sbox[x]]);
    seen[sbox[x]] = true;
  }
}

void test_apply_columns() {
  const SBoxTable sbox = SBoxTable::build();

  State256 zero;
  marvin::apply_sbox(zero, sbox);
  CHECK_EQ(zero.popcount(), 0);

  // A single column changes in place and nothing else moves.
  State256 one;
  one.set_column(0, 0, 0xF);
  marvin::apply_sbox(one, sbox);
  CHECK_EQ(one.column(0, 0), 0xA);
  State256 expected;
  expected.set_column(0, 0, 0xA);
  CHECK(one == expected);

  testsupport::DetRng rng(0x53u);
  for (int i = 0; i < 100; ++i) {
    std::array<std::uint8_t, 32> bytes{};
    rng.fill(bytes);
    State256 s = State256::from_bytes(bytes);
    const State256 original = s;

    State256 expected_all;
    for (std::size_t b = 0; b < 4; ++b) {
      for (std::size_t c = 0; c < 16; ++c) {
        expected_all.set_column(b, c, sbox[original.column(b, c)]);
      }
    }
    marvin::apply_sbox(s, sbox);
    CHECK(s == expected_all);

    marvin::apply_sbox(s, sbox);
    CHECK(s == original);
  }
}

void test_bitsliced_matches_table() {
  const SBoxTable sbox = SBoxTable::build();

  // Every nibble value at every one of 64 lane positions.
  for (unsigned v = 0; v < 16; ++v) {
    std::uint64_t a = (v & 8) ? ~0ULL : 0;
    std::uint64_t b = (v & 4) ? ~0ULL : 0;
    std::uint64_t c = (v & 2) ? ~0ULL : 0;
    std::uint64_t d = (v & 1) ? ~0ULL : 0;
    marvin::apply_sbox_bitsliced(a, b, c, d);
    const unsigned s = sbox[v];
    CHECK_EQ(a, (s & 8) ? ~0ULL : 0);
    CHECK_EQ(b, (s & 4) ? ~0ULL : 0);
    CHECK_EQ(c, (s & 2) ? ~0ULL : 0);
    CHECK_EQ(d, (s & 1) ? ~0ULL : 0);
  }

  testsupport::DetRng rng(0x54u);
  for (int i = 0; i < 200; ++i) {
    std::uint64_t lanes[4] = {rng.word(), rng.word(), rng.word(), rng.word()};
    std::uint64_t out[4] = {lanes[0], lanes[1], lanes[2], lanes[3]};
    marvin::apply_sbox_bitsliced(out[0], out[1], out[2], out[3]);
    for (unsigned pos = 0; pos < 64; ++pos) {
      unsigned in_nibble = 0;
      unsigned out_nibble = 0;
      for (unsigned lane = 0; lane < 4; ++lane) {
        in_nibble |= ((lanes[lane] >> pos) & 1u) << (3 - lane);
        out_nibble |= ((out[lane] >> pos) & 1u) << (3 - lane);
      }
      CHECK_EQ(out_nibble, sbox[in_nibble]);
    }
  }

  // The same gate network on 16-bit words drives the row-oriented form.
  std::uint16_t a16 = 0xFFFF, b16 = 0, c16 = 0, d16 = 0;
  marvin::apply_sbox_bitsliced(a16, b16, c16, d16);
  CHECK_EQ(a16, 0);
  CHECK_EQ(b16, 0xFFFF);  // 0x8 maps to 0x4
  CHECK_EQ(c16, 0);
  CHECK_EQ(d16, 0);
}

void test_ddt() {
  const SBoxTable sbox = SBoxTable::build();
  const marvin::DistributionTable ddt = marvin::compute_ddt(sbox);

  CHECK_EQ(ddt[0][0], 16);
  for (unsigned dy = 1; dy < 16; ++dy) {
    CHECK_EQ(ddt[0][dy], 0);
  }
  for (unsigned dx = 0; dx < 16; ++dx) {
    int total = 0;
    for (unsigned dy = 0; dy < 16; ++dy) {
      total += ddt[dx][dy];
      CHECK(ddt[dx][dy] % 2 == 0);
    }
    CHECK_EQ(total, 16);
  }
  CHECK_EQ(marvin::max_ddt_count(ddt), 4);
}

void test_lat() {
  const SBoxTable sbox = SBoxTable::build();
  const marvin::DistributionTable lat = marvin::compute_lat(sbox);

  CHECK_EQ(lat[0][0], 8);
  for (unsigned b = 1; b < 16; ++b) {
    CHECK_EQ(lat[0][b], 0);
  }
  for (unsigned a = 1; a < 16; ++a) {
    CHECK_EQ(lat[a][0], 0);
  }
  CHECK_EQ(marvin::max_lat_abs(lat), 4);
}

void test_degree() {
  const SBoxTable sbox = SBoxTable::build();
  CHECK_EQ(marvin::algebraic_degree(sbox.entries()), 3);

  std::array<std::uint8_t, 16> identity{};
  for (unsigned x = 0; x < 16; ++x) {
    identity[x] = static_cast<std::uint8_t>(x);
  }
  CHECK_EQ(marvin::algebraic_degree(identity), 1);

  std::array<std::uint8_t, 16> constant{};
  constant.fill(0x5);
  CHECK_EQ(marvin::algebraic_degree(constant), 0);
}

void test_anf_reproduces_table() {
  const SBoxTable sbox = SBoxTable::build();
  const auto anf = marvin::anf_coefficients(sbox.entries());
  for (unsigned x = 0; x < 16; ++x) {
    unsigned value = 0;
    for (unsigned bit = 0; bit < 4; ++bit) {
      unsigned acc = 0;
      for (unsigned m = 0; m < 16; ++m) {
        if ((anf[bit] >> m) & 1u) {
          acc ^= ((m & x) == m) ? 1u : 0u;
        }
      }
      value |= acc << bit;
    }
    CHECK_EQ(value, sbox[x]);
  }
}

}  // namespace

int main() {
  test_circuit_values();
  test_table_matches_circuit();
  test_involution_and_bijection();
  test_apply_columns();
  test_bitsliced_matches_table();
  test_ddt();
  test_lat();
  test_degree();
  test_anf_reproduces_table();
  return testsupport::finish("test_sbox");
}
