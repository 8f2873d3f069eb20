#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "marvin/state.hpp"

namespace marvin {

// 16x16 binary matrix acting on row words. rows[i] holds matrix row i with
// column 0 in bit 15, matching the State256 row convention.
struct LBoxMatrix {
  std::array<std::uint16_t, 16> rows{};

  friend bool operator==(const LBoxMatrix&, const LBoxMatrix&) = default;
};

LBoxMatrix lbox_identity();

// The shipped diffusion matrix: involutive, branch number 8.
LBoxMatrix default_lbox();

// Text format: 16 rows of 16 characters from {0,1}, row-major, column 0
// leftmost. Blank lines and lines starting with '#' are ignored. Throws
// std::invalid_argument with a line number on malformed input.
LBoxMatrix parse_lbox(std::string_view text);
LBoxMatrix load_lbox(const std::filesystem::path& path);
std::string format_lbox(const LBoxMatrix& matrix);

// Matrix-vector product over GF(2); v uses the row word convention.
std::uint16_t lbox_mul(const LBoxMatrix& matrix, std::uint16_t v);

LBoxMatrix lbox_multiply(const LBoxMatrix& a, const LBoxMatrix& b);
std::optional<LBoxMatrix> lbox_inverse(const LBoxMatrix& matrix);

// Minimum over nonzero v of wt(v) + wt(M v); exhaustive over all 65535
// nonzero inputs.
int branch_number(const LBoxMatrix& matrix);

struct LBoxReport {
  bool invertible = false;
  bool involutive = false;
  int branch_number = 0;

  // The bar a substitute diffusion matrix must clear.
  bool valid() const { return invertible && involutive && branch_number == 8; }

  friend bool operator==(const LBoxReport&, const LBoxReport&) = default;
};

LBoxReport validate_lbox(const LBoxMatrix& matrix);

// Full 65536-entry product table; built once per cipher instance.
struct LBoxLookup {
  std::vector<std::uint16_t> table;

  std::uint16_t operator[](std::uint16_t v) const { return table[v]; }
};

LBoxLookup build_lookup(const LBoxMatrix& matrix);

// Multiplies every row word of every block through the lookup.
void apply_lbox(State256& state, const LBoxLookup& lookup);

}  // namespace marvin
