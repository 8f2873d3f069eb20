#include "marvin/sbox.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>

namespace marvin {

std::uint8_t sbox_circuit(std::uint8_t value) {
  const unsigned a = (value >> 3) & 1u;
  const unsigned b = (value >> 2) & 1u;
  const unsigned c = (value >> 1) & 1u;
  const unsigned d = value & 1u;
  const unsigned t0 = a ^ (b & c);
  const unsigned t1 = d ^ (t0 & c);
  const unsigned t2 = c ^ (t1 & b);
  const unsigned t3 = b ^ (t0 & t1);
  return static_cast<std::uint8_t>((t3 << 3) | (t0 << 2) | (t1 << 1) | t2);
}

SBoxTable SBoxTable::build() {
  std::array<std::uint8_t, 16> entries{};
  for (unsigned x = 0; x < 16; ++x) {
    entries[x] = sbox_circuit(static_cast<std::uint8_t>(x));
  }
  for (unsigned x = 0; x < 16; ++x) {
    if (entries[entries[x]] != x) {
      throw std::logic_error("substitution table is not an involution");
    }
    if (entries[x] != kSBoxTable[x]) {
      throw std::logic_error("gate network disagrees with the committed table");
    }
  }
  return SBoxTable(entries);
}

void apply_sbox(State256& state, const SBoxTable& sbox) {
  for (std::size_t block = 0; block < kBlockCount; ++block) {
    for (std::size_t col = 0; col < kColsPerBlock; ++col) {
      state.set_column(block, col, sbox[state.column(block, col)]);
    }
  }
}

DistributionTable compute_ddt(const SBoxTable& sbox) {
  DistributionTable ddt{};
  for (unsigned dx = 0; dx < 16; ++dx) {
    for (unsigned x = 0; x < 16; ++x) {
      ++ddt[dx][sbox[x] ^ sbox[x ^ dx]];
    }
  }
  return ddt;
}

DistributionTable compute_lat(const SBoxTable& sbox) {
  DistributionTable lat{};
  for (unsigned a = 0; a < 16; ++a) {
    for (unsigned b = 0; b < 16; ++b) {
      int agree = 0;
      for (unsigned x = 0; x < 16; ++x) {
        const int in_parity = std::popcount(a & x) & 1;
        const int out_parity = std::popcount(b & sbox[x]) & 1;
        if (in_parity == out_parity) {
          ++agree;
        }
      }
      lat[a][b] = agree - 8;
    }
  }
  return lat;
}

int max_ddt_count(const DistributionTable& ddt) {
  int best = 0;
  for (unsigned dx = 1; dx < 16; ++dx) {
    for (unsigned dy = 0; dy < 16; ++dy) {
      best = std::max(best, ddt[dx][dy]);
    }
  }
  return best;
}

int max_lat_abs(const DistributionTable& lat) {
  int best = 0;
  for (unsigned a = 0; a < 16; ++a) {
    for (unsigned b = 0; b < 16; ++b) {
      if (a == 0 && b == 0) {
        continue;
      }
      best = std::max(best, std::abs(lat[a][b]));
    }
  }
  return best;
}

std::array<std::uint16_t, 4> anf_coefficients(std::span<const std::uint8_t, 16> table) {
  std::array<std::uint16_t, 4> anf{};
  for (unsigned bit = 0; bit < 4; ++bit) {
    std::array<unsigned, 16> f{};
    for (unsigned x = 0; x < 16; ++x) {
      f[x] = (table[x] >> bit) & 1u;
    }
    // Moebius transform over the 4-dimensional hypercube.
    for (unsigned dim = 0; dim < 4; ++dim) {
      for (unsigned x = 0; x < 16; ++x) {
        if (x & (1u << dim)) {
          f[x] ^= f[x ^ (1u << dim)];
        }
      }
    }
    std::uint16_t mask = 0;
    for (unsigned m = 0; m < 16; ++m) {
      mask = static_cast<std::uint16_t>(mask | (f[m] << m));
    }
    anf[bit] = mask;
  }
  return anf;
}

int algebraic_degree(std::span<const std::uint8_t, 16> table) {
  const auto anf = anf_coefficients(table);
  int degree = 0;
  for (const std::uint16_t mask : anf) {
    for (unsigned m = 0; m < 16; ++m) {
      if (mask & (1u << m)) {
        degree = std::max(degree, std::popcount(m));
      }
    }
  }
  return degree;
}

}  // namespace marvin
