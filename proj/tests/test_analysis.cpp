#include "marvin/analysis.hpp"

#include <algorithm>
#include <stdexcept>

#include "marvin/lbox.hpp"
#include "support/check.hpp"

using marvin::AuditReport;
using marvin::CipherParams;
using marvin::PermutationTable;
using marvin::SBoxTable;
using marvin::State256;
using marvin::WideTrailBounds;

namespace {

void test_wide_trail_bounds() {
  const WideTrailBounds four = marvin::wide_trail_bounds(8, 5, 4);
  CHECK_EQ(four.active_sboxes_4r, 40);
  CHECK_EQ(four.diff_prob_4r_log2, -80);
  CHECK_EQ(four.lin_corr_4r_log2, -40);
  CHECK_EQ(four.diff_prob_full_log2, -80);

  const WideTrailBounds full = marvin::wide_trail_bounds(8, 5, 28);
  CHECK_EQ(full.active_sboxes_4r, 40);
  CHECK_EQ(full.diff_prob_full_log2, -560);

  const WideTrailBounds measured = marvin::wide_trail_bounds(8, 2, 28);
  CHECK_EQ(measured.active_sboxes_4r, 16);
  CHECK_EQ(measured.diff_prob_4r_log2, -32);
  CHECK_EQ(measured.lin_corr_4r_log2, -16);
  CHECK_EQ(measured.diff_prob_full_log2, -224);

  // Rounds below a full 4-round segment bound nothing.
  CHECK_EQ(marvin::wide_trail_bounds(8, 5, 3).diff_prob_full_log2, 0);

  CHECK_THROWS(std::invalid_argument, marvin::wide_trail_bounds(0, 5, 4));
  CHECK_THROWS(std::invalid_argument, marvin::wide_trail_bounds(8, 0, 4));
  CHECK_THROWS(std::invalid_argument, marvin::wide_trail_bounds(8, 5, 0));
  CHECK_THROWS(std::invalid_argument, marvin::wide_trail_bounds(-8, 5, 4));
}

void test_theta_branch_default() {
  const SBoxTable sbox = SBoxTable::build();
  CHECK_EQ(marvin::theta_partition_branch(marvin::default_permutation(), sbox), 2);

  PermutationTable identity;
  for (std::size_t i = 0; i < 64; ++i) {
    identity.dest[i] = static_cast<std::uint8_t>(i);
  }
  CHECK_EQ(marvin::theta_partition_branch(identity, sbox), 2);
}

// A table sending the two Sets of every pair to two distinct non-source
// blocks: destination block (b + 1 + half) mod 4, destination set p for
// half 0 and 8 + p for half 1.
PermutationTable split_table() {
  PermutationTable t;
  for (std::size_t block = 0; block < 4; ++block) {
    for (std::size_t pair = 0; pair < 8; ++pair) {
      for (std::size_t half = 0; half < 2; ++half) {
        const std::size_t dest_block = (block + 1 + half) % 4;
        const std::size_t dest_set = 8 * half + pair;
        t.dest[16 * block + 2 * pair + half] =
            static_cast<std::uint8_t>(16 * dest_block + dest_set);
      }
    }
  }
  return t;
}

void test_theta_branch_split_table() {
  const SBoxTable sbox = SBoxTable::build();
  const PermutationTable table = split_table();
  CHECK(marvin::validate_permutation(table).bijective);
  CHECK(marvin::validate_permutation(table).pair_splitting);

  // Full-column output differences (both halves active) always reach two
  // distinct non-source blocks under this table.
  const marvin::DistributionTable ddt = marvin::compute_ddt(sbox);
  int best = 8;
  for (std::size_t block = 0; block < 4; ++block) {
    for (std::size_t col = 0; col < 16; ++col) {
      for (unsigned din = 1; din < 16; ++din) {
        for (unsigned dout = 1; dout < 16; ++dout) {
          if (ddt[din][dout] == 0 || (dout >> 2) == 0 || (dout & 3) == 0) {
            continue;
          }
          State256 diff;
          diff.set_column(block, col, static_cast<std::uint8_t>(dout));
          marvin::apply_permutation(diff, table);
          int active = 1;
          for (std::size_t b = 0; b < 4; ++b) {
            bool hit = false;
            for (std::size_t r = 0; r < 4; ++r) {
              hit = hit || diff.row(b, r) != 0;
            }
            if (hit) {
              ++active;
            }
          }
          best = std::min(best, active);
        }
      }
    }
  }
  CHECK_EQ(best, 3);

  // The unrestricted enumeration still finds single-half differences.
  CHECK_EQ(marvin::theta_partition_branch(table, sbox), 2);
}

void test_audit_default() {
  const CipherParams params = CipherParams::make_default();
  const AuditReport report = marvin::run_audit(params);

  CHECK(report.sbox_involutive);
  CHECK_EQ(report.sbox_max_ddt_count, 4);
  CHECK_EQ(report.sbox_max_lat_abs, 4);
  CHECK_EQ(report.sbox_degree, 3);
  CHECK(report.lbox_invertible);
  CHECK(report.lbox_involutive);
  CHECK_EQ(report.lbox_branch, 8);
  CHECK(report.permute_bijective);
  CHECK(report.permute_block_spreading);
  CHECK(report.permute_pair_splitting);
  CHECK(report.hard_claims_pass);

  CHECK_EQ(report.theta_branch_measured, 2);
  CHECK_EQ(report.theta_branch_claimed, 5);
  CHECK(!report.theta_matches_claim);
  CHECK(!report.theta_method.empty());

  CHECK_EQ(report.bounds_claimed.active_sboxes_4r, 40);
  CHECK_EQ(report.bounds_claimed.diff_prob_4r_log2, -80);
  CHECK_EQ(report.bounds_claimed.lin_corr_4r_log2, -40);
  CHECK_EQ(report.bounds_claimed.diff_prob_full_log2, -560);
  CHECK_EQ(report.bounds_measured.active_sboxes_4r, 16);
  CHECK_EQ(report.bounds_measured.diff_prob_full_log2, -224);

  CHECK_EQ(report.sbox_table, "02138b6d4ef5c79a");
  CHECK(report.to_text().find("hard claims: PASS") != std::string::npos);
  CHECK(report.to_text().find("MISMATCH") != std::string::npos);
}

void test_audit_weak_lbox_fails_hard() {
  const CipherParams params =
      CipherParams::make(28, marvin::lbox_identity(), marvin::default_permutation());
  const AuditReport report = marvin::run_audit(params);
  CHECK(report.lbox_invertible);
  CHECK(report.lbox_involutive);
  CHECK_EQ(report.lbox_branch, 2);
  CHECK(!report.hard_claims_pass);
  CHECK(report.to_text().find("hard claims: FAIL") != std::string::npos);
}

void test_audit_deterministic() {
  const CipherParams params = CipherParams::make_default();
  const AuditReport a = marvin::run_audit(params);
  const AuditReport b = marvin::run_audit(params);
  CHECK(a == b);
  CHECK_EQ(a.to_kv(), b.to_kv());
  CHECK_EQ(a.to_text(), b.to_text());
}

void test_audit_kv_round_trip() {
  const CipherParams params = CipherParams::make_default();
  const AuditReport report = marvin::run_audit(params);

  const std::string kv = report.to_kv();
  const AuditReport parsed = AuditReport::from_kv(kv);
  CHECK(parsed == report);
  CHECK_EQ(parsed.to_kv(), kv);

  CHECK_THROWS(std::invalid_argument, AuditReport::from_kv(""));
  CHECK_THROWS(std::invalid_argument, AuditReport::from_kv("format=marvin-audit-v1\n"));
  CHECK_THROWS(std::invalid_argument, AuditReport::from_kv(kv + "extra.field=1\n"));
  CHECK_THROWS(std::invalid_argument, AuditReport::from_kv(kv + "rounds=28\n"));
  CHECK_THROWS(std::invalid_argument, AuditReport::from_kv("garbage"));

  std::string wrong_tag = kv;
  wrong_tag.replace(wrong_tag.find("marvin-audit-v1"), 15, "marvin-audit-v9");
  CHECK_THROWS(std::invalid_argument, AuditReport::from_kv(wrong_tag));
}

void test_audit_rejects_zero_rounds() {
  const CipherParams params = CipherParams::make(0);
  CHECK_THROWS(std::invalid_argument, marvin::run_audit(params));
}

}  // namespace

int main() {
  test_wide_trail_bounds();
  test_theta_branch_default();
  test_theta_branch_split_table();
  test_audit_default();
  test_audit_weak_lbox_fails_hard();
  test_audit_deterministic();
  test_audit_kv_round_trip();
  test_audit_rejects_zero_rounds();
  return testsupport::finish("test_analysis");
}
