#include "marvin/analysis.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "marvin/lbox.hpp"
#include "marvin/state.hpp"

namespace marvin {

namespace {

constexpr char kFormatTag[] = "marvin-audit-v1";

constexpr char kThetaMethod[] =
    "exhaustive over 64 column positions x 15 input differences x DDT-compatible "
    "output differences; multi-column output differences only add destination "
    "blocks, so single-column inputs attain the minimum";

bool block_active(const State256& s, std::size_t block) {
  for (std::size_t r = 0; r < kRowsPerBlock; ++r) {
    if (s.row(block, r) != 0) {
      return true;
    }
  }
  return false;
}

std::string hex_nibbles(const std::array<std::uint8_t, 16>& table) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  for (const std::uint8_t v : table) {
    out += digits[v & 0xF];
  }
  return out;
}

std::string hex_word(std::uint16_t word) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  for (int shift = 12; shift >= 0; shift -= 4) {
    out += digits[(word >> shift) & 0xF];
  }
  return out;
}

std::string yes_no(bool v) { return v ? "yes" : "no"; }

// Renders count-of-16 probabilities: exact power of two if possible.
std::string prob_of_16(int count) {
  for (int log = 0; log <= 4; ++log) {
    if (count == (1 << log)) {
      return "2^" + std::to_string(log - 4);
    }
  }
  return std::to_string(count) + "/16";
}

class KvWriter {
 public:
  void put(const std::string& key, const std::string& value) {
    out_ += key;
    out_ += '=';
    out_ += value;
    out_ += '\n';
  }
  void put(const std::string& key, int value) { put(key, std::to_string(value)); }
  void put(const std::string& key, bool value) { put(key, std::string(value ? "true" : "false")); }
  const std::string& str() const { return out_; }

 private:
  std::string out_;
};

class KvReader {
 public:
  explicit KvReader(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') {
        line.pop_back();
      }
      if (line.empty()) {
        continue;
      }
      const std::size_t eq = line.find('=');
      if (eq == std::string::npos) {
        throw std::invalid_argument("audit report line " + std::to_string(line_no) +
                                    ": missing '='");
      }
      const std::string key = line.substr(0, eq);
      if (fields_.contains(key)) {
        throw std::invalid_argument("audit report: duplicate field '" + key + "'");
      }
      fields_[key] = line.substr(eq + 1);
    }
  }

  std::string get_string(const std::string& key) {
    const auto it = fields_.find(key);
    if (it == fields_.end()) {
      throw std::invalid_argument("audit report: missing field '" + key + "'");
    }
    consumed_.insert(it->first);
    return it->second;
  }

  int get_int(const std::string& key) {
    const std::string value = get_string(key);
    try {
      std::size_t used = 0;
      const int parsed = std::stoi(value, &used);
      if (used != value.size()) {
        throw std::invalid_argument(value);
      }
      return parsed;
    } catch (const std::exception&) {
      throw std::invalid_argument("audit report: field '" + key + "' is not an integer");
    }
  }

  bool get_bool(const std::string& key) {
    const std::string value = get_string(key);
    if (value == "true") {
      return true;
    }
    if (value == "false") {
      return false;
    }
    throw std::invalid_argument("audit report: field '" + key + "' is not a boolean");
  }

  void finish() const {
    for (const auto& [key, value] : fields_) {
      if (!consumed_.contains(key)) {
        throw std::invalid_argument("audit report: unknown field '" + key + "'");
      }
    }
  }

 private:
  std::map<std::string, std::string> fields_;
  std::set<std::string> consumed_;
};

void put_bounds(KvWriter& kv, const std::string& prefix, const WideTrailBounds& b) {
  kv.put(prefix + ".rounds", b.rounds);
  kv.put(prefix + ".lbox_branch", b.lbox_branch);
  kv.put(prefix + ".theta_branch", b.theta_branch);
  kv.put(prefix + ".active_sboxes_4r", b.active_sboxes_4r);
  kv.put(prefix + ".diff_prob_4r_log2", b.diff_prob_4r_log2);
  kv.put(prefix + ".lin_corr_4r_log2", b.lin_corr_4r_log2);
  kv.put(prefix + ".diff_prob_full_log2", b.diff_prob_full_log2);
}

WideTrailBounds get_bounds(KvReader& kv, const std::string& prefix) {
  WideTrailBounds b;
  b.rounds = kv.get_int(prefix + ".rounds");
  b.lbox_branch = kv.get_int(prefix + ".lbox_branch");
  b.theta_branch = kv.get_int(prefix + ".theta_branch");
  b.active_sboxes_4r = kv.get_int(prefix + ".active_sboxes_4r");
  b.diff_prob_4r_log2 = kv.get_int(prefix + ".diff_prob_4r_log2");
  b.lin_corr_4r_log2 = kv.get_int(prefix + ".lin_corr_4r_log2");
  b.diff_prob_full_log2 = kv.get_int(prefix + ".diff_prob_full_log2");
  return b;
}

}  // namespace

WideTrailBounds wide_trail_bounds(int lbox_branch, int theta_branch, int rounds) {
  if (lbox_branch < 1 || theta_branch < 1 || rounds < 1) {
    throw std::invalid_argument("wide trail inputs must be positive");
  }
  WideTrailBounds b;
  b.rounds = rounds;
  b.lbox_branch = lbox_branch;
  b.theta_branch = theta_branch;
  b.active_sboxes_4r = lbox_branch * theta_branch;
  b.diff_prob_4r_log2 = -2 * b.active_sboxes_4r;
  b.lin_corr_4r_log2 = -b.active_sboxes_4r;
  b.diff_prob_full_log2 = -2 * b.active_sboxes_4r * (rounds / 4);
  return b;
}

int theta_partition_branch(const PermutationTable& table, const SBoxTable& sbox) {
  const DistributionTable ddt = compute_ddt(sbox);
  int best = static_cast<int>(2 * kBlockCount);
  for (std::size_t block = 0; block < kBlockCount; ++block) {
    for (std::size_t col = 0; col < kColsPerBlock; ++col) {
      for (unsigned din = 1; din < 16; ++din) {
        for (unsigned dout = 1; dout < 16; ++dout) {
          if (ddt[din][dout] == 0) {
            continue;
          }
          State256 diff;
          diff.set_column(block, col, static_cast<std::uint8_t>(dout));
          apply_permutation(diff, table);
          int active = 1;  // the input block
          for (std::size_t b = 0; b < kBlockCount; ++b) {
            if (block_active(diff, b)) {
              ++active;
            }
          }
          best = std::min(best, active);
        }
      }
    }
  }
  return best;
}

AuditReport run_audit(const CipherParams& params) {
  if (params.rounds() < 1) {
    throw std::invalid_argument("audit requires at least one round");
  }

  AuditReport report;
  report.rounds = params.rounds();

  report.sbox_table = hex_nibbles(params.sbox().entries());
  std::string rows;
  for (std::size_t i = 0; i < 16; ++i) {
    rows += hex_word(params.lbox_matrix().rows[i]);
    if (i != 15) {
      rows += ',';
    }
  }
  report.lbox_rows = rows;
  std::string perm;
  for (std::size_t i = 0; i < kSetCount; ++i) {
    perm += std::to_string(params.permutation().dest[i]);
    if (i != kSetCount - 1) {
      perm += ' ';
    }
  }
  report.permute_table = perm;

  const auto& sbox = params.sbox();
  report.sbox_involutive = true;
  for (unsigned x = 0; x < 16; ++x) {
    if (sbox[sbox[x]] != x) {
      report.sbox_involutive = false;
    }
  }
  report.sbox_max_ddt_count = max_ddt_count(compute_ddt(sbox));
  report.sbox_max_lat_abs = max_lat_abs(compute_lat(sbox));
  report.sbox_degree = algebraic_degree(sbox.entries());

  const LBoxReport lreport = validate_lbox(params.lbox_matrix());
  report.lbox_invertible = lreport.invertible;
  report.lbox_involutive = lreport.involutive;
  report.lbox_branch = lreport.branch_number;

  const PermutationReport preport = validate_permutation(params.permutation());
  report.permute_bijective = preport.bijective;
  report.permute_block_spreading = preport.block_spreading;
  report.permute_pair_splitting = preport.pair_splitting;

  report.theta_branch_measured = theta_partition_branch(params.permutation(), sbox);
  report.theta_branch_claimed = kClaimedThetaBranch;
  report.theta_matches_claim = report.theta_branch_measured == report.theta_branch_claimed;
  report.theta_method = kThetaMethod;

  report.bounds_claimed =
      wide_trail_bounds(kClaimedLBoxBranch, kClaimedThetaBranch, params.rounds());
  report.bounds_measured =
      wide_trail_bounds(report.lbox_branch, report.theta_branch_measured, params.rounds());

  report.hard_claims_pass =
      report.sbox_involutive && report.sbox_max_ddt_count == kClaimedMaxDdtCount &&
      report.sbox_max_lat_abs == kClaimedMaxLatAbs && report.sbox_degree == kClaimedSBoxDegree &&
      report.lbox_invertible && report.lbox_involutive &&
      report.lbox_branch == kClaimedLBoxBranch && report.permute_bijective &&
      report.permute_block_spreading;

  return report;
}

std::string AuditReport::to_text() const {
  std::ostringstream out;
  out << "cipher audit, " << rounds << " rounds\n";
  out << "s-box " << sbox_table << ": involutive " << yes_no(sbox_involutive) << ", max DDT "
      << sbox_max_ddt_count << "/16 (prob " << prob_of_16(sbox_max_ddt_count) << "), max |LAT| "
      << sbox_max_lat_abs << " (corr " << prob_of_16(2 * sbox_max_lat_abs) << "), degree "
      << sbox_degree << "\n";
  out << "l-box: invertible " << yes_no(lbox_invertible) << ", involutive "
      << yes_no(lbox_involutive) << ", branch number " << lbox_branch << " (required "
      << kClaimedLBoxBranch << ")\n";
  out << "set permutation: bijective " << yes_no(permute_bijective) << ", block-spreading "
      << yes_no(permute_block_spreading) << ", pair-splitting " << yes_no(permute_pair_splitting)
      << "\n";
  out << "theta partition branch: measured " << theta_branch_measured << ", claimed "
      << theta_branch_claimed << (theta_matches_claim ? "" : " [MISMATCH, reported only]")
      << "\n";
  out << "  method: " << theta_method << "\n";
  out << "4-round bounds, claimed branches (" << bounds_claimed.lbox_branch << " x "
      << bounds_claimed.theta_branch << "): >= " << bounds_claimed.active_sboxes_4r
      << " active s-boxes, diff prob <= 2^" << bounds_claimed.diff_prob_4r_log2
      << ", lin corr <= 2^" << bounds_claimed.lin_corr_4r_log2 << "\n";
  out << "4-round bounds, measured branches (" << bounds_measured.lbox_branch << " x "
      << bounds_measured.theta_branch << "): >= " << bounds_measured.active_sboxes_4r
      << " active s-boxes, diff prob <= 2^" << bounds_measured.diff_prob_4r_log2
      << ", lin corr <= 2^" << bounds_measured.lin_corr_4r_log2 << "\n";
  out << rounds << "-round diff prob bound: claimed 2^" << bounds_claimed.diff_prob_full_log2
      << ", measured 2^" << bounds_measured.diff_prob_full_log2 << "\n";
  out << "hard claims: " << (hard_claims_pass ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string AuditReport::to_kv() const {
  KvWriter kv;
  kv.put("format", std::string(kFormatTag));
  kv.put("rounds", rounds);
  kv.put("sbox.table", sbox_table);
  kv.put("sbox.involutive", sbox_involutive);
  kv.put("sbox.max_ddt_count", sbox_max_ddt_count);
  kv.put("sbox.max_lat_abs", sbox_max_lat_abs);
  kv.put("sbox.degree", sbox_degree);
  kv.put("lbox.rows", lbox_rows);
  kv.put("lbox.invertible", lbox_invertible);
  kv.put("lbox.involutive", lbox_involutive);
  kv.put("lbox.branch", lbox_branch);
  kv.put("permute.table", permute_table);
  kv.put("permute.bijective", permute_bijective);
  kv.put("permute.block_spreading", permute_block_spreading);
  kv.put("permute.pair_splitting", permute_pair_splitting);
  kv.put("theta.measured", theta_branch_measured);
  kv.put("theta.claimed", theta_branch_claimed);
  kv.put("theta.matches_claim", theta_matches_claim);
  kv.put("theta.method", theta_method);
  put_bounds(kv, "bounds.claimed", bounds_claimed);
  put_bounds(kv, "bounds.measured", bounds_measured);
  kv.put("hard_claims_pass", hard_claims_pass);
  return kv.str();
}

AuditReport AuditReport::from_kv(const std::string& text) {
  KvReader kv(text);
  if (kv.get_string("format") != kFormatTag) {
    throw std::invalid_argument("audit report: unsupported format tag");
  }
  AuditReport report;
  report.rounds = kv.get_int("rounds");
  report.sbox_table = kv.get_string("sbox.table");
  report.sbox_involutive = kv.get_bool("sbox.involutive");
  report.sbox_max_ddt_count = kv.get_int("sbox.max_ddt_count");
  report.sbox_max_lat_abs = kv.get_int("sbox.max_lat_abs");
  report.sbox_degree = kv.get_int("sbox.degree");
  report.lbox_rows = kv.get_string("lbox.rows");
  report.lbox_invertible = kv.get_bool("lbox.invertible");
  report.lbox_involutive = kv.get_bool("lbox.involutive");
  report.lbox_branch = kv.get_int("lbox.branch");
  report.permute_table = kv.get_string("permute.table");
  report.permute_bijective = kv.get_bool("permute.bijective");
  report.permute_block_spreading = kv.get_bool("permute.block_spreading");
  report.permute_pair_splitting = kv.get_bool("permute.pair_splitting");
  report.theta_branch_measured = kv.get_int("theta.measured");
  report.theta_branch_claimed = kv.get_int("theta.claimed");
  report.theta_matches_claim = kv.get_bool("theta.matches_claim");
  report.theta_method = kv.get_string("theta.method");
  report.bounds_claimed = get_bounds(kv, "bounds.claimed");
  report.bounds_measured = get_bounds(kv, "bounds.measured");
  report.hard_claims_pass = kv.get_bool("hard_claims_pass");
  kv.finish();
  return report;
}

}  // namespace marvin
