#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace parcov {

// ---------------------------------------------------------------------------
// Set systems
// ---------------------------------------------------------------------------

/// A family of m subsets over the ground set {0, ..., n-1}.
///
/// Sets are stored sorted and duplicate-free. Empty sets and repeated sets at
/// different positions are legal. The maximum set cardinality and the maximum
/// element frequency are computed once at construction.
class SetSystem {
 public:
  SetSystem() = default;
  /// Throws InputError if any element lies outside [0, n).
  SetSystem(int n, std::vector<std::vector<int>> sets);

  int n() const noexcept { return n_; }
  int m() const noexcept { return static_cast<int>(sets_.size()); }

  std::span<const int> set(int i) const { return sets_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::vector<int>>& sets() const noexcept { return sets_; }

  /// Largest |S_i| (0 for an empty family).
  int max_cardinality() const noexcept { return max_cardinality_; }
  /// Largest number of sets containing a single element.
  int max_frequency() const noexcept { return max_frequency_; }

  /// |union of the sets at `indices`|, computed from scratch.
  int coverage(std::span<const int> indices) const;
  /// Number of distinct elements appearing in some set.
  int union_size() const;

  friend bool operator==(const SetSystem&, const SetSystem&) = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> sets_;
  int max_cardinality_ = 0;
  int max_frequency_ = 0;
};

/// Budget k and coverage target p for a MAX k-SET COVER query.
struct CoverQuery {
  int k = 0;
  int p = 0;
};

/// Throws InputError unless 0 <= k <= m and 0 <= p <= n.
void validate_query(const SetSystem& sys, const CoverQuery& q);

// ---------------------------------------------------------------------------
// CNF formulas
// ---------------------------------------------------------------------------

/// Variable indices are 0-based internally; DIMACS files use 1-based ids.
struct Literal {
  int var = 0;
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;

class CnfFormula {
 public:
  CnfFormula() = default;
  /// Sorts each clause by variable and merges repeated literals.
  /// Throws InputError on out-of-range variables or tautological clauses.
  CnfFormula(int n_vars, std::vector<Clause> clauses);

  int n_vars() const noexcept { return n_vars_; }
  int m() const noexcept { return static_cast<int>(clauses_.size()); }
  const std::vector<Clause>& clauses() const noexcept { return clauses_; }
  const Clause& clause(int c) const { return clauses_.at(static_cast<std::size_t>(c)); }

  /// Positive / negative occurrences of `var` over the whole clause list.
  int occ_pos(int var) const { return occ_pos_.at(static_cast<std::size_t>(var)); }
  int occ_neg(int var) const { return occ_neg_.at(static_cast<std::size_t>(var)); }
  /// Same, restricted to the clauses listed in `subset`.
  int occ_pos(int var, std::span<const int> subset) const;
  int occ_neg(int var, std::span<const int> subset) const;

  /// max over variables of occ_pos + occ_neg.
  int max_frequency() const noexcept { return max_frequency_; }

  /// Clauses satisfied when exactly `true_vars` are true and all others false.
  int count_satisfied(std::span<const int> true_vars) const;
  /// Clauses satisfied by the all-false assignment.
  int count_negative_satisfied() const;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;

 private:
  int n_vars_ = 0;
  std::vector<Clause> clauses_;
  std::vector<int> occ_pos_;
  std::vector<int> occ_neg_;
  int max_frequency_ = 0;
};

/// Budget k (true variables) and target p (satisfied clauses).
struct SatQuery {
  int k = 0;
  int p = 0;
};

/// Throws InputError unless 0 <= k <= n_vars and 0 <= p <= m.
void validate_query(const CnfFormula& phi, const SatQuery& q);

// ---------------------------------------------------------------------------
// Graphs
// ---------------------------------------------------------------------------

/// Simple undirected graph on vertices {0, ..., n-1}.
class Graph {
 public:
  Graph() = default;
  /// Normalizes each edge to (min, max), sorts and removes duplicates.
  /// Throws InputError on self-loops or out-of-range endpoints.
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int n() const noexcept { return n_; }
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }
  std::span<const int> neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  int max_degree() const noexcept;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
};

// ---------------------------------------------------------------------------
// Text formats
// ---------------------------------------------------------------------------

/// "p psc <n> <m>" then m lines "s e1 e2 ..." with 1-based elements; "c" comments.
SetSystem parse_set_system(std::string_view text);
std::string write_set_system(const SetSystem& sys);

/// Standard DIMACS CNF.
CnfFormula parse_dimacs_cnf(std::string_view text);
std::string write_dimacs_cnf(const CnfFormula& phi);

/// DIMACS edge format: "p edge <n> <m>", then "e <u> <v>" lines (1-based).
Graph parse_dimacs_graph(std::string_view text);
std::string write_dimacs_graph(const Graph& g);

// ---------------------------------------------------------------------------
// Seeded generators
// ---------------------------------------------------------------------------

/// m non-empty sets, each with at most delta_max elements, such that no
/// element is in more than f_max sets. Memberships that would push an element
/// past f_max are never drawn. Throws InputError when
/// m > f_max * n (non-empty sets cannot fit) or on bad arguments.
SetSystem gen_set_system(int n, int m, int delta_max, int f_max, std::uint64_t seed);

/// m non-empty clauses of at most clause_len_max distinct variables, no
/// variable occurring more than f_max times, signs uniform.
CnfFormula gen_cnf(int n_vars, int m, int clause_len_max, int f_max, std::uint64_t seed);

/// G(n, q) random graph, edge probability `edge_prob`.
Graph gen_graph(int n, double edge_prob, std::uint64_t seed);

}  // namespace parcov
