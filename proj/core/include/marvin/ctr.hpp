#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "marvin/cipher.hpp"

namespace marvin {

inline constexpr std::size_t kNonceBytes = 16;

using CtrNonce = std::array<std::uint8_t, kNonceBytes>;

// Counter block i is nonce || i as a 128-bit big-endian integer, starting
// at 0. The keystream is the block encryption of successive counter blocks;
// applying the same call twice restores the input.
// Requires out.size() == in.size(); throws std::invalid_argument.
void ctr_crypt(const CipherParams& params, const Key256& key, const CtrNonce& nonce,
               std::span<const std::uint8_t> in, std::span<std::uint8_t> out);

// The 32-byte counter block for a given block index (low 64 bits of the
// counter; the high 64 bits are zero until index wraps, which a single
// message cannot reach).
std::array<std::uint8_t, kStateBytes> ctr_counter_block(const CtrNonce& nonce,
                                                        std::uint64_t index);

}  // namespace marvin
