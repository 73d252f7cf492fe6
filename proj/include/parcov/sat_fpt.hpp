#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "parcov/instances.hpp"
#include "parcov/report.hpp"

namespace parcov {

struct SatSearchOptions {
  std::uint64_t node_cap = 100'000'000;
  /// Most pure-positive clauses a leaf hitting-set DP may hold.
  int dp_cap = 22;
  TieBreak tie_break = TieBreak::kSmallestIndex;
};

/// Exact MAX SAT-k by polarity branching with a hitting-set DP at the leaves.
///
/// Branches on a variable that still occurs with both signs among the open
/// clauses. At a leaf every open variable is pure. The negative ones are set
/// false. The remaining all-positive clauses need at most k_left true
/// variables to hit as many of them as possible: min_hit[mask] over clause
/// masks gives that. Stops at the first branch reaching p.
SolveReport satk_exact(const CnfFormula& phi, const SatQuery& q, const SatSearchOptions& options = {});

enum class PresolveVerdict { kFeasible, kInfeasible, kPass };

enum class PresolveRule {
  kNone,
  kAllFalse,        // R1: the all-false assignment already reaches p
  kHighFrequency,   // R2: p < f/2, one variable of top frequency
  kSmallTarget,     // R3: p < k, greedy strict-improvement trues
  kDelegateExact,   // R4: p >= m/2, answered by satk_exact
};

std::string_view to_string(PresolveRule rule);

struct PresolveResult {
  PresolveVerdict verdict = PresolveVerdict::kPass;
  PresolveRule rule = PresolveRule::kNone;
  /// Set for kFeasible: true variables, re-verified against p and k.
  std::optional<std::vector<int>> witness;
  /// The satk_exact report when R4 fired.
  std::optional<SolveReport> exact;
};

/// Applies R1..R4 in order. Witnesses from R1..R3 are verified before being
/// returned; a rule whose construction does not verify falls through.
PresolveResult presolve_rules(const CnfFormula& phi, const SatQuery& q, const SatSearchOptions& options = {});

/// Greedy-criterion branching for MAX SAT-k parameterized by p.
///
/// A node (S, C_s) picks the variable X_i outside S with the most positive
/// occurrences among uncommitted clauses C_u. It branches on
/// (S + X_i, C_s + C+(X_i, C_u)) and, for each clause c of C_u mentioning
/// X_i, on (S, C_s + c). With |S| = k the node checks S directly. With
/// |C_s| >= p it asks satk_exact whether k - |S| more trues satisfy all of C_s.
SolveReport alg2_solve(const CnfFormula& phi, const SatQuery& q, const SatSearchOptions& options = {});

/// presolve_rules, then alg2_solve on PASS.
struct SatPipelineResult {
  PresolveResult presolve;
  SolveReport report;
};
SatPipelineResult solve_sat_pipeline(const CnfFormula& phi, const SatQuery& q, const SatSearchOptions& options = {});

/// sum_{d=0}^{k+p} (f+1)^d.
std::uint64_t alg2_node_bound(const CnfFormula& phi, const SatQuery& q);

}  // namespace parcov
