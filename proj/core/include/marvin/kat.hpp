#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "marvin/cipher.hpp"

namespace marvin {

struct KatRecord {
  Key256 key;
  std::array<std::uint8_t, kStateBytes> plaintext{};
  std::array<std::uint8_t, kStateBytes> ciphertext{};

  friend bool operator==(const KatRecord&, const KatRecord&) = default;
};

class KatParseError : public std::runtime_error {
 public:
  KatParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/*
* Vector file format: records of three lines
*   KEY=<64 hex digits>
*   PT=<64 hex digits>
*   CT=<64 hex digits>
* separated by blank lines; '#' lines are comments.
*/
std::vector<KatRecord> parse_kat(std::istream& in);
void write_kat(std::ostream& out, std::span<const KatRecord> records);

// Fixed boundary patterns (zero/ones keys and plaintexts, every single-bit
// key and plaintext) plus 100 seeded random records. Deterministic for a
// given seed and params.
std::vector<KatRecord> generate_kat_corpus(const CipherParams& params, std::uint64_t seed);

struct KatFailure {
  std::size_t record = 0;  // zero-based
  std::string reason;
};

struct KatVerifyResult {
  std::size_t checked = 0;
  std::vector<KatFailure> failures;

  bool ok() const { return failures.empty(); }
};

// Re-encrypts every record on the reference and lane-sliced paths and
// decrypts the stated ciphertext.
KatVerifyResult verify_kat(const CipherParams& params, std::span<const KatRecord> records);

}  // namespace marvin
