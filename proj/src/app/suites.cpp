#include "parcov/app/suites.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace parcov::suites {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

SetSystem small_cover(std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  int n = uniform(rng, 1, 12);
  int m = uniform(rng, 1, 8);
  int delta = uniform(rng, 1, std::min(n, 4));
  int f = std::max((m + n - 1) / n, uniform(rng, 1, m));
  return gen_set_system(n, m, delta, f, seed);
}

CnfFormula small_cnf(std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0xc2b2ae3d27d4eb4fULL);
  int n = uniform(rng, 1, 10);
  int m = uniform(rng, 1, 10);
  int len = uniform(rng, 1, std::min(n, 4));
  int f = std::max((m + n - 1) / n, uniform(rng, 1, 6));
  return gen_cnf(n, m, len, f, seed);
}

CnfFormula positive_cnf(std::uint64_t seed) {
  CnfFormula base = small_cnf(seed);
  std::vector<Clause> clauses;
  for (const Clause& c : base.clauses()) {
    Clause flipped;
    for (Literal lit : c) flipped.push_back({lit.var, true});
    std::sort(flipped.begin(), flipped.end(), [](Literal a, Literal b) { return a.var < b.var; });
    flipped.erase(std::unique(flipped.begin(), flipped.end(), [](Literal a, Literal b) { return a.var == b.var; }),
                  flipped.end());
    clauses.push_back(std::move(flipped));
  }
  return CnfFormula(base.n_vars(), std::move(clauses));
}

Graph small_graph(std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x165667b19e3779f9ULL);
  int n = uniform(rng, 1, 8);
  double prob = std::uniform_real_distribution<double>(0.0, 0.8)(rng);
  return gen_graph(n, prob, seed);
}

PlantedCover planted_cover(std::uint64_t seed, int n_max) {
  std::mt19937_64 rng(seed ^ 0x27d4eb2f165667c5ULL);
  int n = uniform(rng, 2, std::max(2, n_max));
  int k0 = uniform(rng, 1, std::min(n, 12));

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  // k0 - 1 distinct cut points give k0 non-empty blocks.
  std::vector<int> cuts(static_cast<std::size_t>(n - 1));
  std::iota(cuts.begin(), cuts.end(), 1);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(static_cast<std::size_t>(k0 - 1));
  cuts.push_back(0);
  cuts.push_back(n);
  std::sort(cuts.begin(), cuts.end());

  std::vector<std::vector<int>> sets;
  for (std::size_t b = 0; b + 1 < cuts.size(); ++b) {
    sets.emplace_back(order.begin() + cuts[b], order.begin() + cuts[b + 1]);
  }
  int noise = uniform(rng, 0, 2 * k0 + 4);
  if (noise > 0) {
    int delta = std::max(1, n / std::max(1, k0));
    SetSystem extra = gen_set_system(n, noise, delta, noise, seed + 1);
    for (const auto& s : extra.sets()) sets.push_back(s);
  }
  std::shuffle(sets.begin(), sets.end(), rng);
  return {SetSystem(n, std::move(sets)), k0};
}

}  // namespace parcov::suites
