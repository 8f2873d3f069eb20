#include "marvin/cipher.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

namespace marvin {

namespace {

std::uint8_t xtime(std::uint8_t v) {
  const unsigned doubled = static_cast<unsigned>(v) << 1;
  return static_cast<std::uint8_t>((doubled ^ ((v & 0x80) ? 0x11B : 0)) & 0xFF);
}

}  // namespace

Key256 Key256::from_bytes(std::span<const std::uint8_t> data) {
  if (data.size() != kKeyBytes) {
    throw std::invalid_argument("key must be exactly 32 bytes, got " +
                                std::to_string(data.size()));
  }
  Key256 key;
  std::copy(data.begin(), data.end(), key.bytes.begin());
  return key;
}

std::vector<State256> round_constants(int rounds) {
  if (rounds < 1 || rounds > kMaxRounds) {
    throw std::invalid_argument("round count must be in 1..255, got " + std::to_string(rounds));
  }
  std::vector<State256> constants;
  constants.reserve(static_cast<std::size_t>(rounds));
  std::uint8_t rc = 0x01;
  for (int r = 0; r < rounds; ++r) {
    std::array<std::uint8_t, kStateBytes> bytes{};
    for (std::size_t block = 0; block < kBlockCount; ++block) {
      bytes[8 * block] = static_cast<std::uint8_t>(rc ^ block);
    }
    constants.push_back(State256::from_bytes(bytes));
    rc = xtime(rc);
  }
  return constants;
}

Lanes to_lanes(const State256& state) {
  Lanes lanes{};
  for (std::size_t r = 0; r < kRowsPerBlock; ++r) {
    std::uint64_t lane = 0;
    for (std::size_t block = 0; block < kBlockCount; ++block) {
      lane |= static_cast<std::uint64_t>(state.row(block, r)) << (16 * (3 - block));
    }
    lanes[r] = lane;
  }
  return lanes;
}

State256 from_lanes(const Lanes& lanes) {
  State256 state;
  for (std::size_t r = 0; r < kRowsPerBlock; ++r) {
    for (std::size_t block = 0; block < kBlockCount; ++block) {
      state.set_row(block, r,
                    static_cast<std::uint16_t>((lanes[r] >> (16 * (3 - block))) & 0xFFFF));
    }
  }
  return state;
}

std::vector<LaneMove> compile_permutation_moves(const PermutationTable& table) {
  // Each Set is a two-bit field in two adjacent lanes; a Set move is the
  // same mask-and-shift applied to both lanes of its half.
  std::map<std::tuple<int, int, int>, std::uint64_t> merged;
  for (std::size_t flat = 0; flat < kSetCount; ++flat) {
    const SetIndex src = SetIndex::from_flat(flat);
    const SetIndex dst = SetIndex::from_flat(table.dest[flat]);
    const int src_low = 16 * (3 - src.block) + 14 - 2 * src.pair;
    const int dst_low = 16 * (3 - dst.block) + 14 - 2 * dst.pair;
    const int shift = dst_low - src_low;
    const std::uint64_t mask = 0x3ULL << src_low;
    for (int k = 0; k < 2; ++k) {
      const int src_lane = 2 * src.half + k;
      const int dst_lane = 2 * dst.half + k;
      merged[{src_lane, dst_lane, shift}] |= mask;
    }
  }
  std::vector<LaneMove> moves;
  moves.reserve(merged.size());
  for (const auto& [key, mask] : merged) {
    const auto [src_lane, dst_lane, shift] = key;
    moves.push_back(LaneMove{static_cast<std::uint8_t>(src_lane),
                             static_cast<std::uint8_t>(dst_lane),
                             static_cast<std::int8_t>(shift), mask});
  }
  return moves;
}

Lanes apply_lane_moves(const Lanes& lanes, std::span<const LaneMove> moves) {
  Lanes out{};
  for (const LaneMove& move : moves) {
    const std::uint64_t bits = lanes[move.src_lane] & move.mask;
    out[move.dst_lane] |= move.shift >= 0 ? bits << move.shift : bits >> -move.shift;
  }
  return out;
}

CipherParams::CipherParams(int rounds, const LBoxMatrix& lbox, const PermutationTable& permute)
    : rounds_(rounds),
      sbox_(SBoxTable::build()),
      lbox_matrix_(lbox),
      lbox_(build_lookup(lbox)),
      permute_(permute),
      permute_inv_(invert_permutation(permute)),
      constants_(rounds > 0 ? round_constants(rounds) : std::vector<State256>{}),
      moves_(compile_permutation_moves(permute)),
      moves_inv_(compile_permutation_moves(permute_inv_)) {
  constant_lanes_.reserve(constants_.size());
  for (const State256& c : constants_) {
    constant_lanes_.push_back(to_lanes(c));
  }
}

CipherParams CipherParams::make_default() { return make(kDefaultRounds); }

CipherParams CipherParams::make(int rounds) {
  return make(rounds, default_lbox(), default_permutation());
}

CipherParams CipherParams::make(int rounds, const LBoxMatrix& lbox,
                                const PermutationTable& permute) {
  if (rounds < 0 || rounds > kMaxRounds) {
    throw std::invalid_argument("round count must be in 0..255, got " + std::to_string(rounds));
  }
  const LBoxReport lreport = validate_lbox(lbox);
  if (!lreport.invertible) {
    throw std::invalid_argument("diffusion matrix is singular");
  }
  if (!lreport.involutive) {
    throw std::invalid_argument("diffusion matrix is not an involution");
  }
  if (!validate_permutation(permute).bijective) {
    throw std::invalid_argument("permutation table is not a bijection");
  }
  return CipherParams(rounds, lbox, permute);
}

std::array<std::uint8_t, kStateBytes> encrypt_block(const CipherParams& params, const Key256& key,
                                                    std::span<const std::uint8_t> plaintext) {
  const State256 key_state = State256::from_bytes(key.bytes);
  State256 x = State256::from_bytes(plaintext) ^ key_state;
  for (int r = 0; r < params.rounds(); ++r) {
    apply_sbox(x, params.sbox());
    apply_permutation(x, params.permutation());
    apply_lbox(x, params.lbox());
    x ^= key_state;
    x ^= params.constants()[static_cast<std::size_t>(r)];
  }
  return x.to_bytes();
}

std::array<std::uint8_t, kStateBytes> decrypt_block(const CipherParams& params, const Key256& key,
                                                    std::span<const std::uint8_t> ciphertext) {
  const State256 key_state = State256::from_bytes(key.bytes);
  State256 x = State256::from_bytes(ciphertext);
  for (int r = params.rounds() - 1; r >= 0; --r) {
    x ^= key_state;
    x ^= params.constants()[static_cast<std::size_t>(r)];
    apply_lbox(x, params.lbox());
    apply_permutation(x, params.inverse_permutation());
    apply_sbox(x, params.sbox());
  }
  x ^= key_state;
  return x.to_bytes();
}

namespace {

void sbox_lanes(Lanes& lanes) { apply_sbox_bitsliced(lanes[0], lanes[1], lanes[2], lanes[3]); }

void lbox_lanes(Lanes& lanes, const LBoxLookup& lookup) {
  for (std::uint64_t& lane : lanes) {
    std::uint64_t out = 0;
    for (int block = 0; block < 4; ++block) {
      const int shift = 16 * (3 - block);
      out |= static_cast<std::uint64_t>(lookup[static_cast<std::uint16_t>(lane >> shift)])
             << shift;
    }
    lane = out;
  }
}

void xor_lanes(Lanes& lanes, const Lanes& other) {
  for (std::size_t i = 0; i < lanes.size(); ++i) {
    lanes[i] ^= other[i];
  }
}

}  // namespace

std::array<std::uint8_t, kStateBytes> encrypt_block_bitsliced(
    const CipherParams& params, const Key256& key, std::span<const std::uint8_t> plaintext) {
  const Lanes key_lanes = to_lanes(State256::from_bytes(key.bytes));
  Lanes x = to_lanes(State256::from_bytes(plaintext));
  xor_lanes(x, key_lanes);
  for (int r = 0; r < params.rounds(); ++r) {
    sbox_lanes(x);
    x = apply_lane_moves(x, params.permutation_moves());
    lbox_lanes(x, params.lbox());
    xor_lanes(x, key_lanes);
    xor_lanes(x, params.constant_lanes()[static_cast<std::size_t>(r)]);
  }
  return from_lanes(x).to_bytes();
}

std::array<std::uint8_t, kStateBytes> decrypt_block_bitsliced(
    const CipherParams& params, const Key256& key, std::span<const std::uint8_t> ciphertext) {
  const Lanes key_lanes = to_lanes(State256::from_bytes(key.bytes));
  Lanes x = to_lanes(State256::from_bytes(ciphertext));
  for (int r = params.rounds() - 1; r >= 0; --r) {
    xor_lanes(x, key_lanes);
    xor_lanes(x, params.constant_lanes()[static_cast<std::size_t>(r)]);
    lbox_lanes(x, params.lbox());
    x = apply_lane_moves(x, params.inverse_permutation_moves());
    sbox_lanes(x);
  }
  xor_lanes(x, key_lanes);
  return from_lanes(x).to_bytes();
}

int avalanche_probe(const CipherParams& params, const Key256& key,
                    std::span<const std::uint8_t> plaintext, std::size_t bit) {
  if (bit >= kStateBits) {
    throw std::out_of_range("bit index out of range: " + std::to_string(bit));
  }
  if (plaintext.size() != kStateBytes) {
    throw std::invalid_argument("plaintext must be exactly 32 bytes");
  }
  std::array<std::uint8_t, kStateBytes> flipped{};
  std::copy(plaintext.begin(), plaintext.end(), flipped.begin());
  flipped[bit / 8] ^= static_cast<std::uint8_t>(0x80u >> (bit % 8));

  const auto base = encrypt_block(params, key, plaintext);
  const auto moved = encrypt_block(params, key, flipped);
  int distance = 0;
  for (std::size_t i = 0; i < kStateBytes; ++i) {
    distance += std::popcount(static_cast<unsigned>(base[i] ^ moved[i]));
  }
  return distance;
}

}  // namespace marvin
