#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace parcov {

/// Greedy selection tie-break. Only the witness may change with it, never the verdict.
enum class TieBreak { kSmallestIndex, kLargestIndex };

/// Outcome of one solver call.
///
/// `witness` holds 0-based set indices (cover solvers) or 0-based variables
/// set to true (SAT solvers). `covered` is recomputed from the witness on return.
struct SolveReport {
  bool feasible = false;
  std::optional<std::vector<int>> witness;
  int covered = 0;

  std::uint64_t nodes_explored = 0;
  std::uint64_t leaf_dp_calls = 0;
  std::chrono::nanoseconds wall_time{0};

  // Tree-shape instrumentation checked by the bound tests.
  int max_children = 0;
  int max_depth = 0;
  // Branch steps that failed to make progress (|T|+|C| or clause count). Always 0.
  std::uint64_t stalled_steps = 0;

  double time_ms() const { return std::chrono::duration<double, std::milli>(wall_time).count(); }
};

}  // namespace parcov
