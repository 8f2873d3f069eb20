#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "marvin/state.hpp"

namespace marvin {

inline constexpr std::size_t kSetCount = 64;
inline constexpr std::size_t kSetsPerBlock = 16;

// A Set is a 2x2 bit group: column pair (2*pair, 2*pair + 1) crossed with a
// row pair, half 0 = rows {0,1}, half 1 = rows {2,3}. Each block holds 16
// Sets; flat index = 16*block + 2*pair + half.
struct SetIndex {
  std::uint8_t block = 0;
  std::uint8_t pair = 0;
  std::uint8_t half = 0;

  static SetIndex from_flat(std::size_t flat);
  std::size_t flat() const { return kSetsPerBlock * block + 2u * pair + half; }

  friend bool operator==(const SetIndex&, const SetIndex&) = default;
};

// 4-bit Set value, MSB-first: (r0,c), (r0,c+1), (r1,c), (r1,c+1) where
// c = 2*pair and (r0,r1) are the half's rows.
std::uint8_t extract_set(const State256& state, SetIndex index);
void inject_set(State256& state, SetIndex index, std::uint8_t value);

// dest[i] is the flattened destination Set of flattened source Set i.
struct PermutationTable {
  std::array<std::uint8_t, kSetCount> dest{};

  friend bool operator==(const PermutationTable&, const PermutationTable&) = default;
};

// Shipped table: source (block b, set 4q + r) moves to
// (block (b + r) mod 4, set 4q + b).
PermutationTable default_permutation();

// Throws std::invalid_argument if the table is not a bijection.
PermutationTable invert_permutation(const PermutationTable& table);

// Text format: 64 whitespace-separated integers in 0..63; '#' starts a
// comment running to end of line.
PermutationTable parse_permutation(std::string_view text);
PermutationTable load_permutation(const std::filesystem::path& path);
std::string format_permutation(const PermutationTable& table);

struct PermutationReport {
  bool bijective = false;
  // Every source block sends exactly four Sets to each destination block.
  bool block_spreading = false;
  // The two Sets of every column pair land in different destination blocks.
  bool pair_splitting = false;

  bool valid() const { return bijective && block_spreading && pair_splitting; }

  friend bool operator==(const PermutationReport&, const PermutationReport&) = default;
};

PermutationReport validate_permutation(const PermutationTable& table);

// Moves all 64 Sets at once; Set values are not altered, only relocated.
void apply_permutation(State256& state, const PermutationTable& table);

}  // namespace marvin
