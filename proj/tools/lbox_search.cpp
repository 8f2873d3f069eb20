#include <CLI11.hpp>

#include <bit>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include "marvin/lbox.hpp"

// Searches for involutive diffusion matrices by conjugating a fixed
// involution through random invertible bases: M = P^-1 S P is always an
// involution, so only the branch number needs checking. Deterministic for a
// given seed. High branch numbers are rare in random bases; the shipped
// matrix comes from a known construction, this tool is for experiments.

namespace {

marvin::LBoxMatrix bit_reversal() {
  marvin::LBoxMatrix m;
  for (std::size_t i = 0; i < 16; ++i) {
    m.rows[i] = static_cast<std::uint16_t>(1u << i);
  }
  return m;
}

// Exact when the result is >= floor; otherwise an early exit witness, which
// is enough to discard the candidate.
int branch_scan(const marvin::LBoxMatrix& m, int floor) {
  int best = 32;
  for (unsigned v = 1; v < 0x10000; ++v) {
    const int weight =
        std::popcount(v) + std::popcount(static_cast<unsigned>(
                               marvin::lbox_mul(m, static_cast<std::uint16_t>(v))));
    if (weight < best) {
      best = weight;
      if (best < floor) {
        return best;
      }
    }
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seeded search for involutive diffusion matrices"};

  std::uint64_t seed = 0x6C626F78;  // "lbox"
  int target = 5;
  int max_iters = 2000;
  std::string out_path;
  app.add_option("--seed", seed, "Search seed")->capture_default_str();
  app.add_option("--target-branch", target, "Stop at this branch number")
      ->capture_default_str();
  app.add_option("--max-iters", max_iters, "Candidate budget")->capture_default_str();
  app.add_option("--out", out_path, "Write the best matrix here (default stdout)");

  CLI11_PARSE(app, argc, argv);

  const marvin::LBoxMatrix sigma = bit_reversal();
  std::mt19937_64 rng(seed);

  marvin::LBoxMatrix best_matrix;
  int best_branch = 0;
  int tried = 0;

  for (int iter = 0; iter < max_iters; ++iter) {
    marvin::LBoxMatrix basis;
    for (std::size_t i = 0; i < 16; ++i) {
      basis.rows[i] = static_cast<std::uint16_t>(rng());
    }
    const auto inverse = marvin::lbox_inverse(basis);
    if (!inverse.has_value()) {
      continue;
    }
    ++tried;
    const marvin::LBoxMatrix candidate =
        marvin::lbox_multiply(*inverse, marvin::lbox_multiply(sigma, basis));

    const int threshold = std::max(target, best_branch + 1);
    const int branch = branch_scan(candidate, threshold);
    if (branch >= threshold) {
      best_matrix = candidate;
      best_branch = branch;
      std::cerr << "iter " << iter << ": branch " << branch << "\n";
      if (best_branch >= target) {
        break;
      }
    }
  }

  if (best_branch == 0) {
    std::cerr << "no invertible candidates out of " << max_iters << " draws\n";
    return 1;
  }

  const marvin::LBoxReport report = marvin::validate_lbox(best_matrix);
  std::cerr << "best: branch " << report.branch_number << " after " << tried
            << " candidates (invertible " << (report.invertible ? "yes" : "no")
            << ", involutive " << (report.involutive ? "yes" : "no") << ")\n";

  const std::string text = marvin::format_lbox(best_matrix);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    out << text;
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 2;
    }
  }
  return report.branch_number >= target ? 0 : 1;
}
