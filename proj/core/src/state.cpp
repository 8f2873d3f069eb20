#include "marvin/state.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace marvin {

std::size_t State256::row_index(std::size_t block, std::size_t row) {
  if (block >= kBlockCount) {
    throw std::out_of_range("block index out of range: " + std::to_string(block));
  }
  if (row >= kRowsPerBlock) {
    throw std::out_of_range("row index out of range: " + std::to_string(row));
  }
  return kRowsPerBlock * block + row;
}

void State256::check_col(std::size_t col) {
  if (col >= kColsPerBlock) {
    throw std::out_of_range("column index out of range: " + std::to_string(col));
  }
}

State256 State256::from_bytes(std::span<const std::uint8_t> bytes) {
  if (bytes.size() != kStateBytes) {
    throw std::invalid_argument("state must be exactly 32 bytes, got " +
                                std::to_string(bytes.size()));
  }
  State256 s;
  for (std::size_t i = 0; i < s.rows_.size(); ++i) {
    s.rows_[i] = static_cast<std::uint16_t>(
        (static_cast<std::uint16_t>(bytes[2 * i]) << 8) | bytes[2 * i + 1]);
  }
  return s;
}

std::array<std::uint8_t, kStateBytes> State256::to_bytes() const {
  std::array<std::uint8_t, kStateBytes> out{};
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    out[2 * i] = static_cast<std::uint8_t>(rows_[i] >> 8);
    out[2 * i + 1] = static_cast<std::uint8_t>(rows_[i] & 0xFF);
  }
  return out;
}

std::uint16_t State256::row(std::size_t block, std::size_t row) const {
  return rows_[row_index(block, row)];
}

void State256::set_row(std::size_t block, std::size_t row, std::uint16_t value) {
  rows_[row_index(block, row)] = value;
}

std::uint8_t State256::column(std::size_t block, std::size_t col) const {
  check_col(col);
  std::uint8_t nibble = 0;
  for (std::size_t r = 0; r < kRowsPerBlock; ++r) {
    const unsigned bit = (rows_[row_index(block, r)] >> (kColsPerBlock - 1 - col)) & 1u;
    nibble = static_cast<std::uint8_t>(nibble | (bit << (kRowsPerBlock - 1 - r)));
  }
  return nibble;
}

void State256::set_column(std::size_t block, std::size_t col, std::uint8_t nibble) {
  check_col(col);
  if (nibble > 0xF) {
    throw std::invalid_argument("column value must be a nibble");
  }
  const std::uint16_t mask = static_cast<std::uint16_t>(1u << (kColsPerBlock - 1 - col));
  for (std::size_t r = 0; r < kRowsPerBlock; ++r) {
    std::uint16_t& word = rows_[row_index(block, r)];
    if ((nibble >> (kRowsPerBlock - 1 - r)) & 1u) {
      word |= mask;
    } else {
      word = static_cast<std::uint16_t>(word & ~mask);
    }
  }
}

bool State256::bit(std::size_t block, std::size_t row, std::size_t col) const {
  check_col(col);
  return (rows_[row_index(block, row)] >> (kColsPerBlock - 1 - col)) & 1u;
}

void State256::set_bit(std::size_t block, std::size_t row, std::size_t col, bool value) {
  check_col(col);
  const std::uint16_t mask = static_cast<std::uint16_t>(1u << (kColsPerBlock - 1 - col));
  std::uint16_t& word = rows_[row_index(block, row)];
  if (value) {
    word |= mask;
  } else {
    word = static_cast<std::uint16_t>(word & ~mask);
  }
}

int State256::popcount() const {
  int total = 0;
  for (const std::uint16_t word : rows_) {
    total += std::popcount(word);
  }
  return total;
}

State256& State256::operator^=(const State256& other) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    rows_[i] ^= other.rows_[i];
  }
  return *this;
}

}  // namespace marvin
