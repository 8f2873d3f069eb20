#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "marvin/state.hpp"

namespace marvin {

// Nibble substitution committed as a constant; SBoxTable::build() re-derives
// it from the gate network and refuses to construct if the two disagree or
// the table is not an involution.
inline constexpr std::array<std::uint8_t, 16> kSBoxTable = {
    0x0, 0x2, 0x1, 0x3, 0x8, 0xB, 0x6, 0xD,
    0x4, 0xE, 0xF, 0x5, 0xC, 0x7, 0x9, 0xA};

// Evaluates the gate network on one nibble (bit 3 = a .. bit 0 = d).
// Exactly four AND and four XOR gates.
std::uint8_t sbox_circuit(std::uint8_t value);

class SBoxTable {
 public:
  // Throws std::logic_error if the derived table is not an involution or
  // disagrees with kSBoxTable.
  static SBoxTable build();

  std::uint8_t operator[](std::size_t value) const { return entries_[value & 0xF]; }
  const std::array<std::uint8_t, 16>& entries() const { return entries_; }

  friend bool operator==(const SBoxTable&, const SBoxTable&) = default;

 private:
  explicit SBoxTable(const std::array<std::uint8_t, 16>& entries) : entries_(entries) {}

  std::array<std::uint8_t, 16> entries_;
};

// Substitutes every column of every block through the table.
void apply_sbox(State256& state, const SBoxTable& sbox);

// Word-parallel form of the gate network. Lane i carries the row-i bits of
// any number of columns; same four AND / four XOR gates as sbox_circuit.
// The output packing swaps the a/b and c/d wires, making the network an
// involution.
template <typename Word>
constexpr void apply_sbox_bitsliced(Word& a, Word& b, Word& c, Word& d) {
  const Word t0 = a ^ (b & c);
  const Word t1 = d ^ (t0 & c);
  const Word t2 = c ^ (t1 & b);
  const Word t3 = b ^ (t0 & t1);
  a = t3;
  b = t0;
  c = t1;
  d = t2;
}

// DDT[dx][dy] = #{x : S(x) ^ S(x ^ dx) = dy}.
// LAT[a][b]   = #{x : parity(a & x) = parity(b & S(x))} - 8.
using DistributionTable = std::array<std::array<int, 16>, 16>;

DistributionTable compute_ddt(const SBoxTable& sbox);
DistributionTable compute_lat(const SBoxTable& sbox);

// Maximum DDT entry over dx != 0 (count out of 16).
int max_ddt_count(const DistributionTable& ddt);
// Maximum |LAT| entry over (a, b) != (0, 0).
int max_lat_abs(const DistributionTable& lat);

// Algebraic normal form of each output bit; the coefficient of monomial m
// (a subset of inputs) is bit m of the returned mask for that output bit.
// Index 0 is output bit 0 (the d' wire).
std::array<std::uint16_t, 4> anf_coefficients(std::span<const std::uint8_t, 16> table);
int algebraic_degree(std::span<const std::uint8_t, 16> table);

}  // namespace marvin
