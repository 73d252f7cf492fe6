#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace parcov::app {

// One (instance, algorithm) run.
struct BenchRecord {
  std::string instance_id;
  std::string algorithm_name;
  int n = 0;
  int m = 0;
  int delta = 0;
  int f = 0;
  int k = 0;
  int p = 0;
  bool feasible = false;
  int covered_satisfied = 0;
  std::uint64_t nodes_explored = 0;
  double time_ms = 0.0;
};

struct BenchConfig {
  std::string suite;  // empty | n-sweep | delta-sweep | sat-sweep | all
  std::uint64_t seed = 0;
  int workers = 1;
  std::uint64_t node_cap = 100'000'000;
  std::optional<int> dp_cap;
};

struct BenchOutcome {
  std::vector<BenchRecord> records;  // suite order, independent of worker count
  std::uint64_t bound_checks = 0;
  std::uint64_t bound_violations = 0;
};

std::vector<std::string> bench_suites();

// Throws InputError for an unknown suite name.
BenchOutcome run_bench(const BenchConfig& config);

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);

}  // namespace parcov::app
