#pragma once

#include <string>

#include "marvin/cipher.hpp"
#include "marvin/permute.hpp"
#include "marvin/sbox.hpp"

namespace marvin {

// Advertised design parameters. The audit recomputes every measurable one
// from the instantiated components and flags disagreements.
inline constexpr int kClaimedMaxDdtCount = 4;  // probability 2^-2 of 16
inline constexpr int kClaimedMaxLatAbs = 4;    // correlation 2^-1
inline constexpr int kClaimedSBoxDegree = 3;
inline constexpr int kClaimedLBoxBranch = 8;
inline constexpr int kClaimedThetaBranch = 5;

struct WideTrailBounds {
  int rounds = 0;
  int lbox_branch = 0;
  int theta_branch = 0;
  // Lower bound on active s-boxes over any 4 consecutive rounds.
  int active_sboxes_4r = 0;
  int diff_prob_4r_log2 = 0;
  int lin_corr_4r_log2 = 0;
  // Product bound over floor(rounds / 4) disjoint 4-round segments.
  int diff_prob_full_log2 = 0;

  friend bool operator==(const WideTrailBounds&, const WideTrailBounds&) = default;
};

// Throws std::invalid_argument on nonpositive inputs.
WideTrailBounds wide_trail_bounds(int lbox_branch, int theta_branch, int rounds);

// Minimum, over single-active-column differences, of active input blocks
// plus active destination blocks after the Set permutation. Exhaustive over
// 64 column positions x 15 input differences x DDT-compatible output
// differences; output differences spanning several columns only relocate
// more Sets and cannot lower the destination-block count, so single-column
// inputs attain the minimum.
int theta_partition_branch(const PermutationTable& table, const SBoxTable& sbox);

struct AuditReport {
  int rounds = 0;

  std::string sbox_table;     // 16 hex digits, S(0) first
  std::string lbox_rows;      // 16 comma-separated hex row words
  std::string permute_table;  // 64 space-separated destinations

  bool sbox_involutive = false;
  int sbox_max_ddt_count = 0;
  int sbox_max_lat_abs = 0;
  int sbox_degree = 0;

  bool lbox_invertible = false;
  bool lbox_involutive = false;
  int lbox_branch = 0;

  bool permute_bijective = false;
  bool permute_block_spreading = false;
  bool permute_pair_splitting = false;

  int theta_branch_measured = 0;
  int theta_branch_claimed = kClaimedThetaBranch;
  bool theta_matches_claim = false;
  std::string theta_method;

  WideTrailBounds bounds_claimed;
  WideTrailBounds bounds_measured;

  // True iff every hard claim holds: s-box involutive with max DDT count 4,
  // max |LAT| 4 and degree 3; L-box invertible, involutive, branch 8;
  // permutation bijective and block-spreading. The theta-branch claim is
  // soft: a mismatch is reported but does not fail the audit.
  bool hard_claims_pass = false;

  std::string to_text() const;
  std::string to_kv() const;
  // Strict inverse of to_kv; throws std::invalid_argument on unknown,
  // missing, duplicate, or malformed fields.
  static AuditReport from_kv(const std::string& text);

  friend bool operator==(const AuditReport&, const AuditReport&) = default;
};

// Deterministic: identical params produce byte-identical reports.
// Throws std::invalid_argument if params.rounds() < 1.
AuditReport run_audit(const CipherParams& params);

}  // namespace marvin
