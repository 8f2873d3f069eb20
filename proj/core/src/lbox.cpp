#include "marvin/lbox.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace marvin {

LBoxMatrix lbox_identity() {
  LBoxMatrix m;
  for (std::size_t i = 0; i < 16; ++i) {
    m.rows[i] = static_cast<std::uint16_t>(1u << (15 - i));
  }
  return m;
}

LBoxMatrix default_lbox() {
  return LBoxMatrix{{0x1AC6, 0x25C9, 0x4A39, 0x8536, 0xA493, 0x5863, 0xA16C, 0x529C,
                     0xC925, 0xC61A, 0x3685, 0x394A, 0x6358, 0x93A4, 0x9C52, 0x6CA1}};
}

LBoxMatrix parse_lbox(std::string_view text) {
  LBoxMatrix m;
  std::size_t row = 0;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    if (line.empty() || line[0] == '#') {
      continue;
    }
    if (row == 16) {
      throw std::invalid_argument("matrix line " + std::to_string(line_no) +
                                  ": expected 16 rows, found more");
    }
    if (line.size() != 16) {
      throw std::invalid_argument("matrix line " + std::to_string(line_no) +
                                  ": expected 16 digits, got " + std::to_string(line.size()));
    }
    std::uint16_t word = 0;
    for (std::size_t col = 0; col < 16; ++col) {
      if (line[col] == '1') {
        word = static_cast<std::uint16_t>(word | (1u << (15 - col)));
      } else if (line[col] != '0') {
        throw std::invalid_argument("matrix line " + std::to_string(line_no) +
                                    ": invalid character '" + line[col] + "'");
      }
    }
    m.rows[row++] = word;
  }
  if (row != 16) {
    throw std::invalid_argument("matrix has " + std::to_string(row) + " rows, expected 16");
  }
  return m;
}

LBoxMatrix load_lbox(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open matrix file: " + path.string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_lbox(text.str());
}

std::string format_lbox(const LBoxMatrix& matrix) {
  std::string out;
  for (const std::uint16_t row : matrix.rows) {
    for (std::size_t col = 0; col < 16; ++col) {
      out += ((row >> (15 - col)) & 1u) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

std::uint16_t lbox_mul(const LBoxMatrix& matrix, std::uint16_t v) {
  std::uint16_t out = 0;
  for (std::size_t i = 0; i < 16; ++i) {
    const int parity = std::popcount(static_cast<unsigned>(matrix.rows[i] & v)) & 1;
    out = static_cast<std::uint16_t>(out | (parity << (15 - i)));
  }
  return out;
}

LBoxMatrix lbox_multiply(const LBoxMatrix& a, const LBoxMatrix& b) {
  LBoxMatrix c;
  for (std::size_t i = 0; i < 16; ++i) {
    std::uint16_t row = 0;
    for (std::size_t k = 0; k < 16; ++k) {
      if ((a.rows[i] >> (15 - k)) & 1u) {
        row ^= b.rows[k];
      }
    }
    c.rows[i] = row;
  }
  return c;
}

std::optional<LBoxMatrix> lbox_inverse(const LBoxMatrix& matrix) {
  std::array<std::uint16_t, 16> work = matrix.rows;
  std::array<std::uint16_t, 16> inv = lbox_identity().rows;
  for (std::size_t col = 0; col < 16; ++col) {
    const std::uint16_t mask = static_cast<std::uint16_t>(1u << (15 - col));
    std::size_t pivot = col;
    while (pivot < 16 && !(work[pivot] & mask)) {
      ++pivot;
    }
    if (pivot == 16) {
      return std::nullopt;
    }
    std::swap(work[col], work[pivot]);
    std::swap(inv[col], inv[pivot]);
    for (std::size_t r = 0; r < 16; ++r) {
      if (r != col && (work[r] & mask)) {
        work[r] ^= work[col];
        inv[r] ^= inv[col];
      }
    }
  }
  return LBoxMatrix{inv};
}

int branch_number(const LBoxMatrix& matrix) {
  int best = 32;
  for (unsigned v = 1; v < 0x10000; ++v) {
    const int weight = std::popcount(v) +
                       std::popcount(static_cast<unsigned>(lbox_mul(matrix, static_cast<std::uint16_t>(v))));
    best = std::min(best, weight);
  }
  return best;
}

LBoxReport validate_lbox(const LBoxMatrix& matrix) {
  LBoxReport report;
  report.invertible = lbox_inverse(matrix).has_value();
  report.involutive = lbox_multiply(matrix, matrix) == lbox_identity();
  report.branch_number = branch_number(matrix);
  return report;
}

LBoxLookup build_lookup(const LBoxMatrix& matrix) {
  LBoxLookup lookup;
  lookup.table.resize(0x10000);
  for (unsigned v = 0; v < 0x10000; ++v) {
    lookup.table[v] = lbox_mul(matrix, static_cast<std::uint16_t>(v));
  }
  return lookup;
}

void apply_lbox(State256& state, const LBoxLookup& lookup) {
  for (std::size_t block = 0; block < kBlockCount; ++block) {
    for (std::size_t r = 0; r < kRowsPerBlock; ++r) {
      state.set_row(block, r, lookup[state.row(block, r)]);
    }
  }
}

}  // namespace marvin
