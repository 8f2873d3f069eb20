#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "marvin/lbox.hpp"
#include "marvin/permute.hpp"
#include "marvin/sbox.hpp"
#include "marvin/state.hpp"

namespace marvin {

inline constexpr int kDefaultRounds = 28;
inline constexpr int kMaxRounds = 255;
inline constexpr std::size_t kKeyBytes = kStateBytes;

struct Key256 {
  std::array<std::uint8_t, kKeyBytes> bytes{};

  // Requires exactly 32 bytes; throws std::invalid_argument.
  static Key256 from_bytes(std::span<const std::uint8_t> data);

  friend bool operator==(const Key256&, const Key256&) = default;
};

// Constants for rounds 0..rounds-1. The byte at offset 0 of block b in
// constant r is rc(r + 1) XOR b, where rc is the GF(2^8) doubling chain
// rc(1) = 0x01, rc(i) = xtime(rc(i - 1)) modulo x^8 + x^4 + x^3 + x + 1.
// Requires 1 <= rounds <= 255; throws std::invalid_argument.
std::vector<State256> round_constants(int rounds);

// One mask-and-shift step of the lane-sliced Set permutation.
struct LaneMove {
  std::uint8_t src_lane = 0;
  std::uint8_t dst_lane = 0;
  std::int8_t shift = 0;
  std::uint64_t mask = 0;

  friend bool operator==(const LaneMove&, const LaneMove&) = default;
};

// Lane i holds the row-i words of blocks 0..3, block 0 in bits 48..63.
using Lanes = std::array<std::uint64_t, 4>;

Lanes to_lanes(const State256& state);
State256 from_lanes(const Lanes& lanes);

std::vector<LaneMove> compile_permutation_moves(const PermutationTable& table);
Lanes apply_lane_moves(const Lanes& lanes, std::span<const LaneMove> moves);

// Immutable per-instance material: tables, lookup, constants, and the
// compiled lane schedule for the sliced path.
class CipherParams {
 public:
  // Shipped components, kDefaultRounds rounds.
  static CipherParams make_default();
  // Shipped components, custom round count (0 disables round constants and
  // leaves only the whitening XOR).
  static CipherParams make(int rounds);
  // Throws std::invalid_argument unless the matrix is invertible and
  // involutive and the table is a bijection.
  static CipherParams make(int rounds, const LBoxMatrix& lbox, const PermutationTable& permute);

  int rounds() const { return rounds_; }
  const SBoxTable& sbox() const { return sbox_; }
  const LBoxMatrix& lbox_matrix() const { return lbox_matrix_; }
  const LBoxLookup& lbox() const { return lbox_; }
  const PermutationTable& permutation() const { return permute_; }
  const PermutationTable& inverse_permutation() const { return permute_inv_; }
  std::span<const State256> constants() const { return constants_; }
  std::span<const LaneMove> permutation_moves() const { return moves_; }
  std::span<const LaneMove> inverse_permutation_moves() const { return moves_inv_; }
  std::span<const Lanes> constant_lanes() const { return constant_lanes_; }

 private:
  CipherParams(int rounds, const LBoxMatrix& lbox, const PermutationTable& permute);

  int rounds_;
  SBoxTable sbox_;
  LBoxMatrix lbox_matrix_;
  LBoxLookup lbox_;
  PermutationTable permute_;
  PermutationTable permute_inv_;
  std::vector<State256> constants_;
  std::vector<LaneMove> moves_;
  std::vector<LaneMove> moves_inv_;
  std::vector<Lanes> constant_lanes_;
};

// Block interfaces require exactly 32 bytes; throw std::invalid_argument.
std::array<std::uint8_t, kStateBytes> encrypt_block(const CipherParams& params, const Key256& key,
                                                    std::span<const std::uint8_t> plaintext);
std::array<std::uint8_t, kStateBytes> decrypt_block(const CipherParams& params, const Key256& key,
                                                    std::span<const std::uint8_t> ciphertext);

// Lane-sliced path; bit-identical to the reference functions.
std::array<std::uint8_t, kStateBytes> encrypt_block_bitsliced(const CipherParams& params,
                                                              const Key256& key,
                                                              std::span<const std::uint8_t> plaintext);
std::array<std::uint8_t, kStateBytes> decrypt_block_bitsliced(const CipherParams& params,
                                                              const Key256& key,
                                                              std::span<const std::uint8_t> ciphertext);

// Hamming distance between E(p) and E(p with bit flipped). Bit 0 is the most
// significant bit of byte 0; throws std::out_of_range for bit > 255.
int avalanche_probe(const CipherParams& params, const Key256& key,
                    std::span<const std::uint8_t> plaintext, std::size_t bit);

}  // namespace marvin
