#pragma once

#include <optional>
#include <vector>

#include "parcov/instances.hpp"

/// Exhaustive reference solvers. They exist for tests and `parcov verify`.
///
/// Candidate index sets are enumerated by cardinality, and within one
/// cardinality in lexicographic order. Only a strictly better value replaces
/// the incumbent, so the reported witness is the smallest-then-lexicographically
/// first optimum.
namespace parcov::oracle {

inline constexpr int kMaxCoverSets = 24;
inline constexpr int kMaxSatVars = 20;
inline constexpr int kMaxGraphVertices = 24;

struct BruteResult {
  int value = 0;
  std::vector<int> witness;
};

/// max |union T| over |T| <= k. Throws ResourceError for m > kMaxCoverSets.
BruteResult brute_max_cover(const SetSystem& sys, int k);

/// max satisfied clauses over true-sets S with |S| <= k, all other variables
/// false. Throws ResourceError for n_vars > kMaxSatVars.
BruteResult brute_max_sat(const CnfFormula& phi, int k);

/// Fewest sets whose union is the whole ground set; nullopt when impossible.
std::optional<BruteResult> brute_min_set_cover(const SetSystem& sys);

/// max over |D| <= k of |union of N[v], v in D| (closed neighbourhoods).
BruteResult brute_max_domination(const Graph& g, int k);

/// max over |D| <= k of the number of edges with an endpoint in D.
BruteResult brute_max_edge_cover(const Graph& g, int k);

/// Best satisfied-clause count over all 2^n assignments, ignoring any budget.
/// Cross-checks brute_max_sat(phi, n_vars).
int max_sat_all_assignments(const CnfFormula& phi);

}  // namespace parcov::oracle
