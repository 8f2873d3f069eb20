#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace testsupport {

// Deterministic byte source; uses raw engine words only so sequences are
// identical across standard library implementations.
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t word() { return engine_(); }

  // n must be a power of two.
  std::uint64_t below(std::uint64_t n) { return word() & (n - 1); }

  void fill(std::span<std::uint8_t> out) {
    std::uint64_t w = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (i % 8 == 0) {
        w = word();
      }
      out[i] = static_cast<std::uint8_t>(w >> (8 * (7 - i % 8)));
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace testsupport
