#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "parcov/report.hpp"

namespace parcov::app {

struct VerifyConfig {
  int covers = 500;  // n <= 12, m <= 8, k <= 4, every p in 0..n
  int cnfs = 500;    // n_vars <= 10, m <= 10, k <= 4, every p in 0..m
  int positive_cnfs = 250;  // as cnfs, all literals positive
  int graphs = 200;  // <= 8 vertices, k <= 3
  TieBreak tie_break = TieBreak::kSmallestIndex;
  std::uint64_t node_cap = 100'000'000;
  std::optional<int> dp_cap;  // overrides both leaf DP caps
};

struct Tally {
  std::uint64_t runs = 0;
  std::uint64_t failures = 0;
};

struct Mismatch {
  std::string check;
  std::uint64_t instance_seed = 0;
  int k = 0;
  int p = 0;
  std::string detail;
};

struct VerifyReport {
  std::map<std::string, Tally> tallies;
  std::vector<Mismatch> mismatches;

  const Tally& tally(const std::string& check) const;
};

// Named configurations: "small" (500/500/250/200) and "tiny" (50/50/25/20).
VerifyConfig verify_suite_config(const std::string& suite);

// Seed of the i-th instance of a stream (0 cover, 1 cnf, 2 graph, 4 positive cnf).
std::uint64_t instance_seed(std::uint64_t seed, int stream, int i);

// Every solver against its oracle; verdict-level comparison. Checks:
//   cover.alg1 cover.alg1_fpt_p cover.witness cover.node_bound
//   cover.greedy_ratio cover.hybrid_ratio cover.hybrid_exact
//   sat.exact sat.pipeline sat.witness sat.node_bound sat.presolve
//   graph.ds graph.pvc graph.structure
VerifyReport run_verify_suite(std::uint64_t seed, const VerifyConfig& config);

}  // namespace parcov::app
