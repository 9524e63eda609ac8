#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "houghton/words.hpp"

namespace houghton {

/// A deterministic table of results. `passed` is false when a check carried
/// by the report failed.
struct ExperimentReport {
  std::string experiment;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  bool passed = true;

  void add_row(std::vector<std::string> row);

  /// FNV-1a 64 of the canonical JSON (without the checksum), as hex.
  std::string checksum() const;
  std::string to_table() const;
  std::string to_csv() const;
  std::string to_json() const;
};

struct GrowthOptions {
  int n = 3;
  GeneratingSetKind genset = GeneratingSetKind::kGij;
  int radius = 7;
  std::size_t cap = 5'000'000;
};
/// Sphere and ball sizes, ball ratios and the 2^r floor.
ExperimentReport growth_experiment(const GrowthOptions& opts);

struct DistortionOptions {
  int max_k = 3;
  int h2_cap = 16;      // BFS levels per side for H_2; sigma_3 has length 31
  int h3_cap = 7;       // BFS levels per side for H_3
  int identity_k = 100;  // word identity checked for k = 1..identity_k
  std::size_t element_cap = 5'000'000;
};
/// Lengths of sigma_k in H_2 against the 4k word in H_3.
ExperimentReport distortion_experiment(const DistortionOptions& opts);

ExperimentReport cosets_experiment(int n, int p, std::uint64_t seed);

/// Homomorphism and translation checks for split_rays on random pairs of U_p.
ExperimentReport split_experiment(int n, int p, std::uint64_t seed, int pairs);

/// archetype: "translate", "swap", "finitary" or "all".
ExperimentReport qi_experiment(const std::string& archetype, int n, int p, std::int64_t distance);

/// Doubling map and stabilizer embedding checks on random pairs.
ExperimentReport cohopf_experiment(int n, std::uint64_t seed, int pairs);

ExperimentReport free_experiment(int max_length);

}  // namespace houghton
