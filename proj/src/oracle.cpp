#include "parcov/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>

#include "parcov/errors.hpp"

namespace parcov::oracle {

namespace {

// Visits every subset of {0..universe-1} with at most max_size members,
// smaller sizes first and lexicographically within a size. Keeps the first
// subset attaining the strict maximum of `value`.
BruteResult best_subset(int universe, int max_size, const std::function<int(const std::vector<int>&)>& value) {
  max_size = std::min(max_size, universe);
  BruteResult best{value({}), {}};
  std::vector<int> combo;
  for (int size = 1; size <= max_size; ++size) {
    combo.resize(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) combo[static_cast<std::size_t>(i)] = i;
    while (true) {
      int v = value(combo);
      if (v > best.value) best = {v, combo};
      int i = size - 1;
      while (i >= 0 && combo[static_cast<std::size_t>(i)] == universe - size + i) --i;
      if (i < 0) break;
      ++combo[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j) combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return best;
}

}  // namespace

BruteResult brute_max_cover(const SetSystem& sys, int k) {
  if (sys.m() > kMaxCoverSets) {
    throw ResourceError("brute_max_cover: m=" + std::to_string(sys.m()) + " exceeds oracle cap " +
                        std::to_string(kMaxCoverSets));
  }
  return best_subset(sys.m(), std::max(k, 0), [&](const std::vector<int>& t) { return sys.coverage(t); });
}

BruteResult brute_max_sat(const CnfFormula& phi, int k) {
  if (phi.n_vars() > kMaxSatVars) {
    throw ResourceError("brute_max_sat: n_vars=" + std::to_string(phi.n_vars()) + " exceeds oracle cap " +
                        std::to_string(kMaxSatVars));
  }
  return best_subset(phi.n_vars(), std::max(k, 0), [&](const std::vector<int>& s) { return phi.count_satisfied(s); });
}

std::optional<BruteResult> brute_min_set_cover(const SetSystem& sys) {
  if (sys.m() > kMaxCoverSets) {
    throw ResourceError("brute_min_set_cover: m=" + std::to_string(sys.m()) + " exceeds oracle cap");
  }
  if (sys.union_size() != sys.n()) return std::nullopt;
  for (int size = 0; size <= sys.m(); ++size) {
    // Best coverage with `size` sets reaches n first at the minimum size.
    BruteResult r = best_subset(sys.m(), size, [&](const std::vector<int>& t) { return sys.coverage(t); });
    if (r.value == sys.n()) return BruteResult{static_cast<int>(r.witness.size()), r.witness};
  }
  return std::nullopt;
}

BruteResult brute_max_domination(const Graph& g, int k) {
  if (g.n() > kMaxGraphVertices) throw ResourceError("brute_max_domination: graph exceeds oracle cap");
  return best_subset(g.n(), std::max(k, 0), [&](const std::vector<int>& d) {
    std::vector<char> dominated(static_cast<std::size_t>(g.n()), 0);
    for (int v : d) {
      dominated[static_cast<std::size_t>(v)] = 1;
      for (int u : g.neighbors(v)) dominated[static_cast<std::size_t>(u)] = 1;
    }
    return static_cast<int>(std::count(dominated.begin(), dominated.end(), 1));
  });
}

BruteResult brute_max_edge_cover(const Graph& g, int k) {
  if (g.n() > kMaxGraphVertices) throw ResourceError("brute_max_edge_cover: graph exceeds oracle cap");
  return best_subset(g.n(), std::max(k, 0), [&](const std::vector<int>& d) {
    std::vector<char> chosen(static_cast<std::size_t>(g.n()), 0);
    for (int v : d) chosen[static_cast<std::size_t>(v)] = 1;
    int covered = 0;
    for (auto [u, v] : g.edges()) covered += (chosen[static_cast<std::size_t>(u)] || chosen[static_cast<std::size_t>(v)]);
    return covered;
  });
}

int max_sat_all_assignments(const CnfFormula& phi) {
  if (phi.n_vars() > kMaxSatVars) throw ResourceError("max_sat_all_assignments: exceeds oracle cap");
  int best = 0;
  std::vector<int> trues;
  for (std::uint32_t mask = 0; mask < (1u << phi.n_vars()); ++mask) {
    trues.clear();
    for (int v = 0; v < phi.n_vars(); ++v) {
      if (mask & (1u << v)) trues.push_back(v);
    }
    best = std::max(best, phi.count_satisfied(trues));
  }
  return best;
}

}  // namespace parcov::oracle
