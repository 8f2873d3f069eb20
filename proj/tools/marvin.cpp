#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "marvin/analysis.hpp"
#include "marvin/cipher.hpp"
#include "marvin/ctr.hpp"
#include "marvin/hex.hpp"
#include "marvin/kat.hpp"

namespace {

constexpr std::uint64_t kDefaultKatSeed = 0x4D41525649ULL;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot open input file: " + path);
  }
  std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
  return data;
}

void write_file(const std::string& path, std::span<const std::uint8_t> data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw ConfigError("cannot open output file: " + path);
  }
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  if (!out) {
    throw ConfigError("write failed: " + path);
  }
}

std::string trimmed(std::string text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ' ||
                           text.back() == '\t')) {
    text.pop_back();
  }
  std::size_t start = 0;
  while (start < text.size() && (text[start] == ' ' || text[start] == '\t')) {
    ++start;
  }
  return text.substr(start);
}

// Key values are hex or @path-to-hex-file.
marvin::Key256 parse_key(const std::string& value) {
  std::string hex = value;
  if (!value.empty() && value[0] == '@') {
    const auto raw = read_file(value.substr(1));
    hex = trimmed(std::string(raw.begin(), raw.end()));
  }
  std::vector<std::uint8_t> bytes;
  try {
    bytes = marvin::from_hex(hex);
  } catch (const std::invalid_argument& err) {
    throw ConfigError(std::string("bad key: ") + err.what());
  }
  if (bytes.size() != marvin::kKeyBytes) {
    throw ConfigError("key must be 32 bytes (64 hex digits), got " +
                      std::to_string(bytes.size()) + " bytes");
  }
  return marvin::Key256::from_bytes(bytes);
}

marvin::CtrNonce parse_nonce(const std::string& value) {
  std::vector<std::uint8_t> bytes;
  try {
    bytes = marvin::from_hex(value);
  } catch (const std::invalid_argument& err) {
    throw ConfigError(std::string("bad nonce: ") + err.what());
  }
  if (bytes.size() != marvin::kNonceBytes) {
    throw ConfigError("nonce must be 16 bytes (32 hex digits), got " +
                      std::to_string(bytes.size()) + " bytes");
  }
  marvin::CtrNonce nonce{};
  std::copy(bytes.begin(), bytes.end(), nonce.begin());
  return nonce;
}

struct ComponentConfig {
  int rounds = marvin::kDefaultRounds;
  std::string lbox_path;
  std::string permute_path;

  void attach(CLI::App* cmd) {
    cmd->add_option("--rounds", rounds, "Round count (0..255)")
        ->capture_default_str();
    cmd->add_option("--lbox", lbox_path, "Diffusion matrix file (16x16 binary)");
    cmd->add_option("--permute", permute_path, "Set permutation file (64 integers)");
  }

  marvin::LBoxMatrix lbox() const {
    return lbox_path.empty() ? marvin::default_lbox() : marvin::load_lbox(lbox_path);
  }

  marvin::PermutationTable permutation() const {
    return permute_path.empty() ? marvin::default_permutation()
                                : marvin::load_permutation(permute_path);
  }

  // Overridden components must clear the full validation bar before they
  // carry traffic; audit and validate-config only need well-formed params.
  marvin::CipherParams params(bool strict) const {
    const marvin::LBoxMatrix matrix = lbox();
    const marvin::PermutationTable table = permutation();
    if (strict && !lbox_path.empty() && !marvin::validate_lbox(matrix).valid()) {
      throw ConfigError("matrix in " + lbox_path +
                        " failed validation (needs invertible, involutive, branch 8); "
                        "run validate-config for details");
    }
    if (strict && !permute_path.empty() && !marvin::validate_permutation(table).valid()) {
      throw ConfigError("permutation in " + permute_path +
                        " failed validation (needs bijective, block-spreading, "
                        "pair-splitting); run validate-config for details");
    }
    return marvin::CipherParams::make(rounds, matrix, table);
  }
};

int cmd_encrypt(const ComponentConfig& config, const std::string& key_text,
                const std::string& nonce_text, const std::string& in_path,
                const std::string& out_path, bool raw_block) {
  const marvin::Key256 key = parse_key(key_text);
  const marvin::CipherParams params = config.params(true);
  const auto input = read_file(in_path);

  if (raw_block) {
    if (input.size() != marvin::kStateBytes) {
      throw ConfigError("--raw-block input must be exactly 32 bytes, got " +
                        std::to_string(input.size()));
    }
    const auto output = marvin::encrypt_block(params, key, input);
    write_file(out_path, output);
    return 0;
  }

  if (nonce_text.empty()) {
    throw ConfigError("--nonce is required unless --raw-block is given");
  }
  const marvin::CtrNonce nonce = parse_nonce(nonce_text);
  std::vector<std::uint8_t> output(marvin::kNonceBytes + input.size());
  std::copy(nonce.begin(), nonce.end(), output.begin());
  marvin::ctr_crypt(params, key, nonce, input,
                    std::span<std::uint8_t>(output).subspan(marvin::kNonceBytes));
  write_file(out_path, output);
  return 0;
}

int cmd_decrypt(const ComponentConfig& config, const std::string& key_text,
                const std::string& in_path, const std::string& out_path, bool raw_block) {
  const marvin::Key256 key = parse_key(key_text);
  const marvin::CipherParams params = config.params(true);
  const auto input = read_file(in_path);

  if (raw_block) {
    if (input.size() != marvin::kStateBytes) {
      throw ConfigError("--raw-block input must be exactly 32 bytes, got " +
                        std::to_string(input.size()));
    }
    const auto output = marvin::decrypt_block(params, key, input);
    write_file(out_path, output);
    return 0;
  }

  if (input.size() < marvin::kNonceBytes) {
    throw ConfigError("input too short: missing 16-byte nonce header");
  }
  marvin::CtrNonce nonce{};
  std::copy(input.begin(), input.begin() + marvin::kNonceBytes, nonce.begin());
  std::vector<std::uint8_t> output(input.size() - marvin::kNonceBytes);
  marvin::ctr_crypt(params, key, nonce,
                    std::span<const std::uint8_t>(input).subspan(marvin::kNonceBytes), output);
  write_file(out_path, output);
  return 0;
}

int cmd_kat_gen(const ComponentConfig& config, std::uint64_t seed, const std::string& out_path) {
  const marvin::CipherParams params = config.params(true);
  const auto records = marvin::generate_kat_corpus(params, seed);
  std::ostringstream text;
  marvin::write_kat(text, records);
  if (out_path.empty()) {
    std::cout << text.str();
  } else {
    const std::string& s = text.str();
    write_file(out_path, std::span<const std::uint8_t>(
                             reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
  }
  std::cerr << "generated " << records.size() << " vectors\n";
  return 0;
}

int cmd_kat_verify(const ComponentConfig& config, const std::string& in_path) {
  const marvin::CipherParams params = config.params(true);
  std::ifstream in(in_path);
  if (!in) {
    throw ConfigError("cannot open input file: " + in_path);
  }
  const auto records = marvin::parse_kat(in);
  const auto result = marvin::verify_kat(params, records);
  if (result.ok()) {
    std::cout << "verified " << result.checked << " vectors on both paths\n";
    return 0;
  }
  for (const auto& failure : result.failures) {
    std::cerr << "record " << failure.record << ": " << failure.reason << "\n";
  }
  std::cerr << result.failures.size() << " of " << result.checked << " vectors failed\n";
  return 1;
}

int cmd_audit(const ComponentConfig& config, const std::string& out_path) {
  const marvin::CipherParams params = config.params(false);
  const marvin::AuditReport report = marvin::run_audit(params);
  std::cout << report.to_text();
  if (!out_path.empty()) {
    const std::string kv = report.to_kv();
    write_file(out_path, std::span<const std::uint8_t>(
                             reinterpret_cast<const std::uint8_t*>(kv.data()), kv.size()));
  }
  return report.hard_claims_pass ? 0 : 1;
}

int cmd_validate_config(const ComponentConfig& config) {
  const marvin::LBoxReport lreport = marvin::validate_lbox(config.lbox());
  const marvin::PermutationReport preport = marvin::validate_permutation(config.permutation());
  std::cout << "l-box: invertible " << (lreport.invertible ? "yes" : "no") << ", involutive "
            << (lreport.involutive ? "yes" : "no") << ", branch number " << lreport.branch_number
            << " -> " << (lreport.valid() ? "valid" : "INVALID") << "\n";
  std::cout << "permutation: bijective " << (preport.bijective ? "yes" : "no")
            << ", block-spreading " << (preport.block_spreading ? "yes" : "no")
            << ", pair-splitting " << (preport.pair_splitting ? "yes" : "no") << " -> "
            << (preport.valid() ? "valid" : "INVALID") << "\n";
  return lreport.valid() && preport.valid() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Marvin-256 block cipher tool"};
  app.require_subcommand(1);

  ComponentConfig encrypt_config;
  std::string encrypt_key, encrypt_nonce, encrypt_in, encrypt_out;
  bool encrypt_raw = false;
  CLI::App* encrypt = app.add_subcommand("encrypt", "Encrypt a file (CTR mode)");
  encrypt_config.attach(encrypt);
  encrypt->add_option("--key", encrypt_key, "Key as 64 hex digits or @file")->required();
  encrypt->add_option("--nonce", encrypt_nonce, "Nonce as 32 hex digits");
  encrypt->add_option("--in", encrypt_in, "Input file")->required();
  encrypt->add_option("--out", encrypt_out, "Output file")->required();
  encrypt->add_flag("--raw-block", encrypt_raw, "Single 32-byte block, no mode, no header");

  ComponentConfig decrypt_config;
  std::string decrypt_key, decrypt_in, decrypt_out;
  bool decrypt_raw = false;
  CLI::App* decrypt = app.add_subcommand("decrypt", "Decrypt a file (CTR mode)");
  decrypt_config.attach(decrypt);
  decrypt->add_option("--key", decrypt_key, "Key as 64 hex digits or @file")->required();
  decrypt->add_option("--in", decrypt_in, "Input file")->required();
  decrypt->add_option("--out", decrypt_out, "Output file")->required();
  decrypt->add_flag("--raw-block", decrypt_raw, "Single 32-byte block, no mode, no header");

  ComponentConfig katgen_config;
  std::uint64_t katgen_seed = kDefaultKatSeed;
  std::string katgen_out;
  CLI::App* katgen = app.add_subcommand("kat-gen", "Generate a known-answer vector corpus");
  katgen_config.attach(katgen);
  katgen->add_option("--seed", katgen_seed, "Seed for the random records")
      ->capture_default_str();
  katgen->add_option("--out", katgen_out, "Output file (default stdout)");

  ComponentConfig katverify_config;
  std::string katverify_in;
  CLI::App* katverify = app.add_subcommand("kat-verify", "Re-check a vector corpus");
  katverify_config.attach(katverify);
  katverify->add_option("--in", katverify_in, "Vector file")->required();

  ComponentConfig audit_config;
  std::string audit_out;
  CLI::App* audit = app.add_subcommand("audit", "Recompute component properties and bounds");
  audit_config.attach(audit);
  audit->add_option("--out", audit_out, "Write machine-readable report to this file");

  ComponentConfig validate_options;
  CLI::App* validate = app.add_subcommand("validate-config", "Validate component files");
  validate_options.attach(validate);

  try {
    app.parse(argc, argv);
    if (app.got_subcommand(encrypt)) {
      return cmd_encrypt(encrypt_config, encrypt_key, encrypt_nonce, encrypt_in, encrypt_out,
                         encrypt_raw);
    }
    if (app.got_subcommand(decrypt)) {
      return cmd_decrypt(decrypt_config, decrypt_key, decrypt_in, decrypt_out, decrypt_raw);
    }
    if (app.got_subcommand(katgen)) {
      return cmd_kat_gen(katgen_config, katgen_seed, katgen_out);
    }
    if (app.got_subcommand(katverify)) {
      return cmd_kat_verify(katverify_config, katverify_in);
    }
    if (app.got_subcommand(audit)) {
      return cmd_audit(audit_config, audit_out);
    }
    if (app.got_subcommand(validate)) {
      return cmd_validate_config(validate_options);
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
