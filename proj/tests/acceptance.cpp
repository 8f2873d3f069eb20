// Acceptance gate: re-derives every stated property of the shipped
// components at full advertised strength and prints one verdict per
// criterion. Exits nonzero if any verdict is FAIL.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <string>

#include "marvin/analysis.hpp"
#include "marvin/cipher.hpp"
#include "marvin/hex.hpp"
#include "marvin/kat.hpp"
#include "support/rng.hpp"

using marvin::CipherParams;
using marvin::Key256;

namespace {

int failures = 0;

void verdict(bool ok, int number, const std::string& text) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", number, text.c_str());
  if (!ok) {
    ++failures;
  }
}

bool criterion_sbox() {
  const marvin::SBoxTable sbox = marvin::SBoxTable::build();
  bool involutive = true;
  for (unsigned x = 0; x < 16; ++x) {
    involutive = involutive && sbox[sbox[x]] == x;
  }
  const int ddt = marvin::max_ddt_count(marvin::compute_ddt(sbox));
  const int lat = marvin::max_lat_abs(marvin::compute_lat(sbox));
  const int degree = marvin::algebraic_degree(sbox.entries());
  return involutive && ddt == 4 && lat == 4 && degree == 3;
}

bool criterion_lbox() {
  const marvin::LBoxReport report = marvin::validate_lbox(marvin::default_lbox());
  return report.invertible && report.involutive && report.branch_number == 8;
}

bool criterion_bounds() {
  const auto four = marvin::wide_trail_bounds(8, 5, 4);
  const auto full = marvin::wide_trail_bounds(8, 5, 28);
  return four.active_sboxes_4r == 40 && four.diff_prob_4r_log2 == -80 &&
         four.lin_corr_4r_log2 == -40 && full.diff_prob_full_log2 == -560;
}

bool criterion_permutation(int& measured_theta) {
  const auto table = marvin::default_permutation();
  const marvin::PermutationReport report = marvin::validate_permutation(table);
  measured_theta =
      marvin::theta_partition_branch(table, marvin::SBoxTable::build());
  return report.bijective && report.block_spreading && report.pair_splitting;
}

bool criterion_cipher() {
  testsupport::DetRng rng(0xACCE97u);

  // decrypt(encrypt(p)) == p for 1000 seeded (key, plaintext) pairs at
  // round counts 0, 1, 4, 28.
  for (const int rounds : {0, 1, 4, 28}) {
    const CipherParams params = CipherParams::make(rounds);
    for (int i = 0; i < 250; ++i) {
      std::array<std::uint8_t, 32> key{};
      std::array<std::uint8_t, 32> pt{};
      rng.fill(key);
      rng.fill(pt);
      const Key256 k = Key256::from_bytes(key);
      if (marvin::decrypt_block(params, k, marvin::encrypt_block(params, k, pt)) != pt) {
        return false;
      }
    }
  }

  // Bitsliced equals reference on 10000 seeded inputs.
  const CipherParams params = CipherParams::make_default();
  for (int i = 0; i < 10000; ++i) {
    std::array<std::uint8_t, 32> key{};
    std::array<std::uint8_t, 32> pt{};
    rng.fill(key);
    rng.fill(pt);
    const Key256 k = Key256::from_bytes(key);
    if (marvin::encrypt_block_bitsliced(params, k, pt) != marvin::encrypt_block(params, k, pt)) {
      return false;
    }
  }

  // Every committed vector still verifies on both paths.
  std::ifstream in(TEST_DATA_DIR "/golden_kats.txt");
  if (!in.good()) {
    return false;
  }
  const auto records = marvin::parse_kat(in);
  return records.size() == 616 && marvin::verify_kat(params, records).ok();
}

bool criterion_avalanche(double& mean) {
  const CipherParams params = CipherParams::make_default();
  testsupport::DetRng rng(0xA7A1u);
  long total = 0;
  for (int i = 0; i < 1000; ++i) {
    std::array<std::uint8_t, 32> key{};
    std::array<std::uint8_t, 32> pt{};
    rng.fill(key);
    rng.fill(pt);
    const std::size_t bit = static_cast<std::size_t>(rng.below(256));
    total += marvin::avalanche_probe(params, Key256::from_bytes(key), pt, bit);
  }
  mean = static_cast<double>(total) / 1000.0;
  return mean >= 118.0 && mean <= 138.0;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();

  verdict(criterion_sbox(), 1,
          "s-box is an involution with max DDT 4/16, max |LAT| 4, degree 3 (exhaustive)");
  verdict(criterion_lbox(), 2,
          "shipped l-box is invertible, involutive, branch number exactly 8 (exhaustive)");
  verdict(criterion_bounds(), 3,
          "wide-trail bounds: 40 active s-boxes per 4 rounds, diff 2^-80, linear 2^-40, "
          "28-round diff 2^-560");

  int measured_theta = 0;
  const bool permutation_ok = criterion_permutation(measured_theta);
  verdict(permutation_ok, 4,
          "set permutation is bijective, block-spreading, pair-splitting; measured "
          "theta-partition branch " + std::to_string(measured_theta) + " vs claimed 5 " +
          (measured_theta == 5 ? "(match)" : "(mismatch reported, not a failure)"));

  verdict(criterion_cipher(), 5,
          "1000 seeded round trips at 0/1/4/28 rounds, 10000 bitsliced/reference matches, "
          "616 committed vectors verified on both paths");

  double mean = 0;
  const bool avalanche_ok = criterion_avalanche(mean);
  verdict(avalanche_ok, 6,
          "avalanche mean over 1000 seeded single-bit flips is " + std::to_string(mean) +
          ", within [118, 138]");

  std::printf("[SKIP] criterion 7: external cryptanalysis and platform cycle counts are out "
              "of scope by design; throughput is reported by the benchmark suite\n");

  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  std::printf("acceptance: %s (%d criteria failed, %lld ms)\n", failures == 0 ? "PASS" : "FAIL",
              failures, static_cast<long long>(elapsed.count()));
  return failures == 0 ? 0 : 1;
}
