#include "marvin/kat.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>

#include "marvin/hex.hpp"

namespace marvin {

namespace {

std::array<std::uint8_t, kStateBytes> parse_hex_field(std::size_t line_no, std::string_view field,
                                                      std::string_view value) {
  std::vector<std::uint8_t> bytes;
  try {
    bytes = from_hex(value);
  } catch (const std::invalid_argument& err) {
    throw KatParseError(line_no, std::string(field) + ": " + err.what());
  }
  if (bytes.size() != kStateBytes) {
    throw KatParseError(line_no, std::string(field) + ": expected 64 hex digits, got " +
                                     std::to_string(value.size()));
  }
  std::array<std::uint8_t, kStateBytes> out{};
  std::copy(bytes.begin(), bytes.end(), out.begin());
  return out;
}

void fill_bytes(std::mt19937_64& rng, std::span<std::uint8_t> out) {
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i % 8 == 0) {
      word = rng();
    }
    out[i] = static_cast<std::uint8_t>(word >> (8 * (7 - i % 8)));
  }
}

}  // namespace

std::vector<KatRecord> parse_kat(std::istream& in) {
  std::vector<KatRecord> records;
  std::string line;
  std::size_t line_no = 0;

  std::array<std::uint8_t, kStateBytes> key{};
  std::array<std::uint8_t, kStateBytes> pt{};
  int have = 0;  // fields seen in the current record, in KEY, PT, CT order

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      if (have != 0) {
        throw KatParseError(line_no, "incomplete record");
      }
      continue;
    }
    if (line[0] == '#') {
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw KatParseError(line_no, "expected FIELD=hex");
    }
    const std::string field = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    if (field == "KEY") {
      if (have != 0) {
        throw KatParseError(line_no, "KEY out of order, expected " + std::string(have == 1 ? "PT" : "CT"));
      }
      key = parse_hex_field(line_no, field, value);
      have = 1;
    } else if (field == "PT") {
      if (have != 1) {
        throw KatParseError(line_no, "PT out of order, expected " + std::string(have == 0 ? "KEY" : "CT"));
      }
      pt = parse_hex_field(line_no, field, value);
      have = 2;
    } else if (field == "CT") {
      if (have != 2) {
        throw KatParseError(line_no, "CT out of order, expected " + std::string(have == 0 ? "KEY" : "PT"));
      }
      KatRecord record;
      record.key = Key256::from_bytes(key);
      record.plaintext = pt;
      record.ciphertext = parse_hex_field(line_no, field, value);
      records.push_back(record);
      have = 0;
    } else {
      throw KatParseError(line_no, "unknown field '" + field + "'");
    }
  }
  if (have != 0) {
    throw KatParseError(line_no + 1, "incomplete record at end of file");
  }
  return records;
}

void write_kat(std::ostream& out, std::span<const KatRecord> records) {
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (i != 0) {
      out << '\n';
    }
    out << "KEY=" << to_hex(records[i].key.bytes) << '\n';
    out << "PT=" << to_hex(records[i].plaintext) << '\n';
    out << "CT=" << to_hex(records[i].ciphertext) << '\n';
  }
}

std::vector<KatRecord> generate_kat_corpus(const CipherParams& params, std::uint64_t seed) {
  std::vector<KatRecord> records;

  const std::array<std::uint8_t, kStateBytes> zero{};
  std::array<std::uint8_t, kStateBytes> ones{};
  ones.fill(0xFF);

  const auto add = [&](const std::array<std::uint8_t, kStateBytes>& key,
                       const std::array<std::uint8_t, kStateBytes>& pt) {
    KatRecord record;
    record.key = Key256::from_bytes(key);
    record.plaintext = pt;
    record.ciphertext = encrypt_block(params, record.key, pt);
    records.push_back(record);
  };

  add(zero, zero);
  add(zero, ones);
  add(ones, zero);
  add(ones, ones);
  for (std::size_t bit = 0; bit < kStateBits; ++bit) {
    std::array<std::uint8_t, kStateBytes> single{};
    single[bit / 8] = static_cast<std::uint8_t>(0x80u >> (bit % 8));
    add(zero, single);
    add(single, zero);
  }

  std::mt19937_64 rng(seed);
  for (int i = 0; i < 100; ++i) {
    std::array<std::uint8_t, kStateBytes> key{};
    std::array<std::uint8_t, kStateBytes> pt{};
    fill_bytes(rng, key);
    fill_bytes(rng, pt);
    add(key, pt);
  }
  return records;
}

KatVerifyResult verify_kat(const CipherParams& params, std::span<const KatRecord> records) {
  KatVerifyResult result;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const KatRecord& record = records[i];
    ++result.checked;
    if (encrypt_block(params, record.key, record.plaintext) != record.ciphertext) {
      result.failures.push_back({i, "reference encryption mismatch"});
      continue;
    }
    if (encrypt_block_bitsliced(params, record.key, record.plaintext) != record.ciphertext) {
      result.failures.push_back({i, "bitsliced encryption mismatch"});
      continue;
    }
    if (decrypt_block(params, record.key, record.ciphertext) != record.plaintext) {
      result.failures.push_back({i, "decryption mismatch"});
    }
  }
  return result;
}

}  // namespace marvin
