#include "marvin/permute.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace marvin {

SetIndex SetIndex::from_flat(std::size_t flat) {
  if (flat >= kSetCount) {
    throw std::out_of_range("set index out of range: " + std::to_string(flat));
  }
  SetIndex idx;
  idx.block = static_cast<std::uint8_t>(flat / kSetsPerBlock);
  idx.pair = static_cast<std::uint8_t>((flat % kSetsPerBlock) / 2);
  idx.half = static_cast<std::uint8_t>(flat % 2);
  return idx;
}

std::uint8_t extract_set(const State256& state, SetIndex index) {
  const std::size_t row0 = 2u * index.half;
  const std::size_t col0 = 2u * index.pair;
  std::uint8_t value = 0;
  value = static_cast<std::uint8_t>(value | (state.bit(index.block, row0, col0) << 3));
  value = static_cast<std::uint8_t>(value | (state.bit(index.block, row0, col0 + 1) << 2));
  value = static_cast<std::uint8_t>(value | (state.bit(index.block, row0 + 1, col0) << 1));
  value = static_cast<std::uint8_t>(value | (state.bit(index.block, row0 + 1, col0 + 1) << 0));
  return value;
}

void inject_set(State256& state, SetIndex index, std::uint8_t value) {
  if (value > 0xF) {
    throw std::invalid_argument("set value must be a nibble");
  }
  const std::size_t row0 = 2u * index.half;
  const std::size_t col0 = 2u * index.pair;
  state.set_bit(index.block, row0, col0, (value >> 3) & 1u);
  state.set_bit(index.block, row0, col0 + 1, (value >> 2) & 1u);
  state.set_bit(index.block, row0 + 1, col0, (value >> 1) & 1u);
  state.set_bit(index.block, row0 + 1, col0 + 1, value & 1u);
}

PermutationTable default_permutation() {
  PermutationTable t;
  for (std::size_t block = 0; block < kBlockCount; ++block) {
    for (std::size_t set = 0; set < kSetsPerBlock; ++set) {
      const std::size_t group = set / 4;
      const std::size_t offset = set % 4;
      const std::size_t dest_block = (block + offset) % kBlockCount;
      const std::size_t dest_set = 4 * group + block;
      t.dest[kSetsPerBlock * block + set] =
          static_cast<std::uint8_t>(kSetsPerBlock * dest_block + dest_set);
    }
  }
  return t;
}

PermutationTable invert_permutation(const PermutationTable& table) {
  PermutationTable inv;
  std::array<bool, kSetCount> seen{};
  for (std::size_t i = 0; i < kSetCount; ++i) {
    const std::uint8_t d = table.dest[i];
    if (d >= kSetCount || seen[d]) {
      throw std::invalid_argument("permutation table is not a bijection");
    }
    seen[d] = true;
    inv.dest[d] = static_cast<std::uint8_t>(i);
  }
  return inv;
}

PermutationTable parse_permutation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<int> values;
  while (std::getline(in, line)) {
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string field;
    while (fields >> field) {
      int value = 0;
      std::size_t used = 0;
      try {
        value = std::stoi(field, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("permutation entry '" + field + "' is not an integer");
      }
      if (used != field.size()) {
        throw std::invalid_argument("permutation entry '" + field + "' is not an integer");
      }
      if (value < 0 || value >= static_cast<int>(kSetCount)) {
        throw std::invalid_argument("permutation entry " + std::to_string(value) +
                                    " out of range 0..63");
      }
      values.push_back(value);
    }
  }
  if (values.size() != kSetCount) {
    throw std::invalid_argument("permutation has " + std::to_string(values.size()) +
                                " entries, expected 64");
  }
  PermutationTable t;
  for (std::size_t i = 0; i < kSetCount; ++i) {
    t.dest[i] = static_cast<std::uint8_t>(values[i]);
  }
  return t;
}

PermutationTable load_permutation(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open permutation file: " + path.string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_permutation(text.str());
}

std::string format_permutation(const PermutationTable& table) {
  std::string out;
  for (std::size_t i = 0; i < kSetCount; ++i) {
    out += std::to_string(table.dest[i]);
    out += (i % 16 == 15) ? '\n' : ' ';
  }
  return out;
}

PermutationReport validate_permutation(const PermutationTable& table) {
  PermutationReport report;

  std::array<bool, kSetCount> seen{};
  report.bijective = true;
  for (const std::uint8_t d : table.dest) {
    if (d >= kSetCount || seen[d]) {
      report.bijective = false;
      break;
    }
    seen[d] = true;
  }

  std::array<std::array<int, kBlockCount>, kBlockCount> spread{};
  for (std::size_t i = 0; i < kSetCount; ++i) {
    if (table.dest[i] < kSetCount) {
      spread[i / kSetsPerBlock][table.dest[i] / kSetsPerBlock] += 1;
    }
  }
  report.block_spreading = true;
  for (const auto& row : spread) {
    for (const int count : row) {
      if (count != static_cast<int>(kBlockCount)) {
        report.block_spreading = false;
      }
    }
  }

  report.pair_splitting = true;
  for (std::size_t i = 0; i < kSetCount; i += 2) {
    if (table.dest[i] >= kSetCount || table.dest[i + 1] >= kSetCount ||
        table.dest[i] / kSetsPerBlock == table.dest[i + 1] / kSetsPerBlock) {
      report.pair_splitting = false;
    }
  }

  return report;
}

void apply_permutation(State256& state, const PermutationTable& table) {
  State256 out;
  for (std::size_t i = 0; i < kSetCount; ++i) {
    const std::uint8_t value = extract_set(state, SetIndex::from_flat(i));
    inject_set(out, SetIndex::from_flat(table.dest[i]), value);
  }
  state = out;
}

}  // namespace marvin
