#include "marvin/ctr.hpp"

#include <algorithm>
#include <stdexcept>

namespace marvin {

std::array<std::uint8_t, kStateBytes> ctr_counter_block(const CtrNonce& nonce,
                                                        std::uint64_t index) {
  std::array<std::uint8_t, kStateBytes> block{};
  std::copy(nonce.begin(), nonce.end(), block.begin());
  for (int i = 0; i < 8; ++i) {
    block[kStateBytes - 1 - i] = static_cast<std::uint8_t>(index >> (8 * i));
  }
  return block;
}

void ctr_crypt(const CipherParams& params, const Key256& key, const CtrNonce& nonce,
               std::span<const std::uint8_t> in, std::span<std::uint8_t> out) {
  if (in.size() != out.size()) {
    throw std::invalid_argument("output buffer size must match input size");
  }
  std::uint64_t index = 0;
  for (std::size_t offset = 0; offset < in.size(); offset += kStateBytes, ++index) {
    const auto counter = ctr_counter_block(nonce, index);
    const auto keystream = encrypt_block_bitsliced(params, key, counter);
    const std::size_t chunk = std::min(kStateBytes, in.size() - offset);
    for (std::size_t i = 0; i < chunk; ++i) {
      out[offset + i] = in[offset + i] ^ keystream[i];
    }
  }
}

}  // namespace marvin
