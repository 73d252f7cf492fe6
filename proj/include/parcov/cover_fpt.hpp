#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "parcov/instances.hpp"
#include "parcov/report.hpp"

namespace parcov {

struct CoverSearchOptions {
  std::uint64_t node_cap = 100'000'000;
  /// Largest imposed-element universe the leaf DP accepts (2^cap table).
  int dp_cap = 26;
  TieBreak tie_break = TieBreak::kSmallestIndex;
};

/// Removes from every set all elements covered by the sets in `chosen`.
/// Set positions are preserved, so the chosen sets themselves become empty.
SetSystem restrict_down(const SetSystem& sys, std::span<const int> chosen);

/// Fewest sets (at most `budget`) whose intersections with `universe` cover it.
///
/// Runs the subset DP over the 2^|universe| masks. Returns an empty vector
/// for an empty universe and nullopt when the minimum exceeds `budget` or some
/// element is in no set. Throws ResourceError if |universe| > dp_cap.
std::optional<std::vector<int>> leaf_exact_cover(const SetSystem& sys, std::span<const int> universe, int budget,
                                                 int dp_cap = 26);

/// Decides MAX k-SET COVER by bounded branching in k + Delta.
///
/// Each node (T, C) picks the greedy set S_i outside T that adds the most
/// elements outside C. Ties go to the set holding more imposed elements not
/// yet covered by T, then to the index order of `tie_break`. It then
/// branches on taking S_i and, for every x in
/// S_i \ C, on imposing x. Leaves with |C| >= p are closed by
/// leaf_exact_cover on the elements of C still uncovered by T. The first
/// feasible leaf found depth-first is returned.
SolveReport alg1_solve(const SetSystem& sys, const CoverQuery& q, const CoverSearchOptions& options = {});

/// Same decision, for use when the parameter is p. Settles p <= k and
/// p <= Delta directly and delegates the remaining instances to alg1_solve.
SolveReport alg1_fpt_as_p(const SetSystem& sys, const CoverQuery& q, const CoverSearchOptions& options = {});

/// sum_{d=0}^{depth} base^d, saturating at UINT64_MAX. 0 when depth < 0.
std::uint64_t geometric_node_bound(std::uint64_t base, int depth);

/// Tree-size bound for alg1_solve: sum_{d=0}^{k+p+Delta-1} (Delta+1)^d.
std::uint64_t alg1_node_bound(const SetSystem& sys, const CoverQuery& q);

}  // namespace parcov
