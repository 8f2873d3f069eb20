#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "marvin/cipher.hpp"
#include "marvin/ctr.hpp"
#include "marvin/lbox.hpp"
#include "marvin/state.hpp"

namespace {

std::vector<std::uint8_t> random_bytes(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> out(count);
  std::size_t i = 0;
  while (i < count) {
    std::uint64_t word = rng();
    for (int b = 0; b < 8 && i < count; ++b, ++i) {
      out[i] = static_cast<std::uint8_t>(word >> (56 - 8 * b));
    }
  }
  return out;
}

marvin::Key256 bench_key() {
  return marvin::Key256::from_bytes(random_bytes(marvin::kKeyBytes, 0xBE5C));
}

std::array<std::uint8_t, marvin::kStateBytes> random_block(std::uint64_t seed) {
  const auto bytes = random_bytes(marvin::kStateBytes, seed);
  std::array<std::uint8_t, marvin::kStateBytes> block{};
  std::copy(bytes.begin(), bytes.end(), block.begin());
  return block;
}

void BM_EncryptBlockReference(benchmark::State& state) {
  const auto params = marvin::CipherParams::make_default();
  const auto key = bench_key();
  auto block = random_block(1);
  for (auto _ : state) {
    block = marvin::encrypt_block(params, key, block);
    benchmark::DoNotOptimize(block.data());
  }
  state.SetBytesProcessed(state.iterations() *
                          static_cast<std::int64_t>(marvin::kStateBytes));
}
BENCHMARK(BM_EncryptBlockReference);

void BM_EncryptBlockBitsliced(benchmark::State& state) {
  const auto params = marvin::CipherParams::make_default();
  const auto key = bench_key();
  auto block = random_block(2);
  for (auto _ : state) {
    block = marvin::encrypt_block_bitsliced(params, key, block);
    benchmark::DoNotOptimize(block.data());
  }
  state.SetBytesProcessed(state.iterations() *
                          static_cast<std::int64_t>(marvin::kStateBytes));
}
BENCHMARK(BM_EncryptBlockBitsliced);

void BM_DecryptBlockBitsliced(benchmark::State& state) {
  const auto params = marvin::CipherParams::make_default();
  const auto key = bench_key();
  auto block = random_block(3);
  for (auto _ : state) {
    block = marvin::decrypt_block_bitsliced(params, key, block);
    benchmark::DoNotOptimize(block.data());
  }
  state.SetBytesProcessed(state.iterations() *
                          static_cast<std::int64_t>(marvin::kStateBytes));
}
BENCHMARK(BM_DecryptBlockBitsliced);

void BM_CtrThroughput(benchmark::State& state) {
  const auto params = marvin::CipherParams::make_default();
  const auto key = bench_key();
  marvin::CtrNonce nonce{};
  const auto plain = random_bytes(static_cast<std::size_t>(state.range(0)), 4);
  std::vector<std::uint8_t> cipher(plain.size());
  for (auto _ : state) {
    marvin::ctr_crypt(params, key, nonce, plain, cipher);
    benchmark::DoNotOptimize(cipher.data());
  }
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(plain.size()));
}
BENCHMARK(BM_CtrThroughput)->Arg(1 << 10)->Arg(1 << 16)->Arg(1 << 20);

void BM_RoundsScaling(benchmark::State& state) {
  const auto params = marvin::CipherParams::make(static_cast<int>(state.range(0)));
  const auto key = bench_key();
  auto block = random_block(5);
  for (auto _ : state) {
    block = marvin::encrypt_block_bitsliced(params, key, block);
    benchmark::DoNotOptimize(block.data());
  }
  state.SetBytesProcessed(state.iterations() *
                          static_cast<std::int64_t>(marvin::kStateBytes));
}
BENCHMARK(BM_RoundsScaling)->Arg(4)->Arg(12)->Arg(28);

void BM_LBoxLookupBuild(benchmark::State& state) {
  const auto matrix = marvin::default_lbox();
  for (auto _ : state) {
    auto lookup = marvin::build_lookup(matrix);
    benchmark::DoNotOptimize(lookup.table.data());
  }
}
BENCHMARK(BM_LBoxLookupBuild);

void BM_BranchNumber(benchmark::State& state) {
  const auto matrix = marvin::default_lbox();
  for (auto _ : state) {
    int branch = marvin::branch_number(matrix);
    benchmark::DoNotOptimize(branch);
  }
}
BENCHMARK(BM_BranchNumber);

}  // namespace

BENCHMARK_MAIN();
