#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

namespace marvin {

inline constexpr std::size_t kBlockCount = 4;
inline constexpr std::size_t kRowsPerBlock = 4;
inline constexpr std::size_t kColsPerBlock = 16;
inline constexpr std::size_t kStateBytes = 32;
inline constexpr std::size_t kStateBits = 256;

/*
* 256-bit cipher state: four 64-bit blocks, each a 4x16 bit matrix.
*
* Layout conventions (normative for the 32-byte wire format):
*   - a row is a 16-bit word with column 0 in bit 15 (MSB-first),
*   - a column is a 4-bit value with row 0 in bit 3,
*   - block b occupies bytes 8b..8b+7; within a block, row r occupies
*     bytes 2r (columns 0..7) and 2r+1 (columns 8..15), MSB-first.
*/
class State256 {
 public:
  State256() = default;

  // Requires exactly kStateBytes bytes; throws std::invalid_argument.
  static State256 from_bytes(std::span<const std::uint8_t> bytes);
  std::array<std::uint8_t, kStateBytes> to_bytes() const;

  std::uint16_t row(std::size_t block, std::size_t row) const;
  void set_row(std::size_t block, std::size_t row, std::uint16_t value);

  std::uint8_t column(std::size_t block, std::size_t col) const;
  void set_column(std::size_t block, std::size_t col, std::uint8_t nibble);

  bool bit(std::size_t block, std::size_t row, std::size_t col) const;
  void set_bit(std::size_t block, std::size_t row, std::size_t col, bool value);

  int popcount() const;

  State256& operator^=(const State256& other);
  friend State256 operator^(State256 a, const State256& b) {
    a ^= b;
    return a;
  }
  friend bool operator==(const State256&, const State256&) = default;

 private:
  static std::size_t row_index(std::size_t block, std::size_t row);
  static void check_col(std::size_t col);

  // Row words, index 4*block + row.
  std::array<std::uint16_t, kBlockCount * kRowsPerBlock> rows_{};
};

}  // namespace marvin
