#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "parcov/cover_fpt.hpp"
#include "parcov/errors.hpp"
#include "parcov/oracle.hpp"

using namespace parcov;

namespace {

SetSystem three_chain() { return SetSystem(4, {{0, 1}, {1, 2}, {2, 3}}); }

// The system restricted to `universe`, renumbered 0..|universe|-1.
SetSystem trace_on(const SetSystem& sys, const std::vector<int>& universe) {
  std::vector<std::vector<int>> sets;
  for (const auto& s : sys.sets()) {
    std::vector<int> t;
    for (std::size_t b = 0; b < universe.size(); ++b) {
      if (std::binary_search(s.begin(), s.end(), universe[b])) t.push_back(static_cast<int>(b));
    }
    sets.push_back(std::move(t));
  }
  return SetSystem(static_cast<int>(universe.size()), std::move(sets));
}

void check_witness_covers(const SetSystem& sys, const std::vector<int>& witness, const std::vector<int>& universe) {
  for (int x : universe) {
    bool hit = std::any_of(witness.begin(), witness.end(), [&](int i) {
      auto s = sys.set(i);
      return std::find(s.begin(), s.end(), x) != s.end();
    });
    CHECK(hit);
  }
}

}  // namespace

TEST_CASE("restrict_down") {
  SetSystem two(3, {{0, 1}, {1, 2}});
  std::vector<int> first{0};
  CHECK(restrict_down(two, first).sets() == std::vector<std::vector<int>>{{}, {2}});
  CHECK(restrict_down(two, {}) == two);

  std::vector<int> middle{1};
  CHECK(restrict_down(three_chain(), middle).sets() == std::vector<std::vector<int>>{{0}, {}, {3}});
}

TEST_CASE("leaf_exact_cover examples") {
  CHECK(leaf_exact_cover(three_chain(), {}, 0) == std::vector<int>{});
  std::vector<int> ends{0, 3};
  CHECK(leaf_exact_cover(three_chain(), ends, 2) == std::vector<int>{0, 2});
  CHECK_FALSE(leaf_exact_cover(three_chain(), ends, 1));

  std::vector<int> wide(27);
  for (int i = 0; i < 27; ++i) wide[static_cast<std::size_t>(i)] = i;
  SetSystem big(27, {wide});
  CHECK_THROWS_AS(leaf_exact_cover(big, wide, 1), ResourceError);
  CHECK_THROWS_AS(leaf_exact_cover(three_chain(), ends, 2, 1), ResourceError);
}

TEST_CASE("leaf_exact_cover agrees with brute_min_set_cover on the traced system") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + trial % 11;
    int m = 1 + trial % 8;
    SetSystem sys = gen_set_system(n, m, std::min(n, 4), m, static_cast<std::uint64_t>(trial));
    std::vector<int> universe;
    for (int x = 0; x < n; ++x) {
      if (rng() % 2 && universe.size() < 10) universe.push_back(x);
    }
    auto exact = oracle::brute_min_set_cover(trace_on(sys, universe));
    for (int budget = 0; budget <= m; ++budget) {
      CAPTURE(trial);
      CAPTURE(budget);
      auto leaf = leaf_exact_cover(sys, universe, budget);
      bool expect = exact && exact->value <= budget;
      REQUIRE(leaf.has_value() == expect);
      if (leaf) {
        CHECK(static_cast<int>(leaf->size()) == exact->value);
        check_witness_covers(sys, *leaf, universe);
      }
    }
  }
}

TEST_CASE("alg1_solve examples") {
  SolveReport r = alg1_solve(three_chain(), {2, 4});
  REQUIRE(r.feasible);
  CHECK(r.covered == 4);
  CHECK(three_chain().coverage(*r.witness) == 4);

  CHECK_FALSE(alg1_solve(three_chain(), {1, 3}).feasible);

  SolveReport zero = alg1_solve(three_chain(), {2, 0});
  REQUIRE(zero.feasible);
  CHECK(zero.witness->empty());
  CHECK(zero.covered == 0);

  // p > k * Delta is rejected before branching.
  SolveReport reject = alg1_solve(three_chain(), {1, 3});
  CHECK(reject.nodes_explored == 0);
}

TEST_CASE("alg1 ties prefer sets holding uncovered imposed elements") {
  // Only {2, 3} reaches 5. With C = {3, 4, 5, 6} and T = {2}, sets 1 and 3 both add one
  // element; set 3 also covers the imposed 4 and 5.
  SetSystem sys(9, {{4, 5, 6}, {1}, {3, 6}, {4, 5, 8}});
  REQUIRE(oracle::brute_max_cover(sys, 2).value == 5);
  for (TieBreak tie : {TieBreak::kSmallestIndex, TieBreak::kLargestIndex}) {
    CoverSearchOptions options;
    options.tie_break = tie;
    SolveReport r = alg1_solve(sys, {2, 5}, options);
    REQUIRE(r.feasible);
    CHECK(*r.witness == std::vector<int>{2, 3});
  }
}

TEST_CASE("alg1_fpt_as_p examples") {
  CHECK(alg1_fpt_as_p(SetSystem(3, {{0}, {1}, {2}}), {3, 3}).feasible);
  CHECK_FALSE(alg1_fpt_as_p(SetSystem(2, {{0}, {0}}), {2, 2}).feasible);
  SolveReport delegated = alg1_fpt_as_p(three_chain(), {2, 3});
  CHECK(delegated.feasible);
  CHECK(delegated.nodes_explored > 0);
  // p <= Delta with one set allowed.
  SolveReport big = alg1_fpt_as_p(SetSystem(4, {{0}, {0, 1, 2}}), {1, 2});
  REQUIRE(big.feasible);
  CHECK(*big.witness == std::vector<int>{1});
  CHECK_FALSE(alg1_fpt_as_p(SetSystem(4, {{0}, {0, 1, 2}}), {0, 2}).feasible);
}

TEST_CASE("alg1 input and resource errors") {
  CHECK_THROWS_AS(alg1_solve(three_chain(), {2, 9}), InputError);
  CHECK_THROWS_AS(alg1_solve(three_chain(), {4, 1}), InputError);
  CoverSearchOptions tight;
  tight.node_cap = 2;
  CHECK_THROWS_AS(alg1_solve(three_chain(), {2, 4}, tight), ResourceError);
}

TEST_CASE("geometric node bound") {
  CHECK(geometric_node_bound(3, 0) == 1);
  CHECK(geometric_node_bound(3, 2) == 13);
  CHECK(geometric_node_bound(1, 4) == 5);
  CHECK(geometric_node_bound(2, -1) == 0);
  CHECK(geometric_node_bound(10, 40) == UINT64_MAX);
  // Delta = 2, k = 2, p = 4: depth 7, base 3.
  CHECK(alg1_node_bound(three_chain(), {2, 4}) == 3280);
}

TEST_CASE("alg1 matches the oracle on random systems") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 250; ++seed) {
    std::mt19937_64 rng(seed);
    int n = 1 + static_cast<int>(rng() % 12);
    int m = 1 + static_cast<int>(rng() % 8);
    int delta = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(n, 4)));
    int f = std::max<int>((m + n - 1) / n, 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(m)));
    SetSystem sys = gen_set_system(n, m, delta, f, seed);
    for (int k = 0; k <= std::min(4, m); ++k) {
      int opt = oracle::brute_max_cover(sys, k).value;
      for (int p = 0; p <= n; ++p) {
        CAPTURE(seed);
        CAPTURE(k);
        CAPTURE(p);
        for (TieBreak tie : {TieBreak::kSmallestIndex, TieBreak::kLargestIndex}) {
          CoverSearchOptions options;
          options.tie_break = tie;
          SolveReport r = alg1_solve(sys, {k, p}, options);
          REQUIRE(r.feasible == (opt >= p));
          if (r.feasible) {
            CHECK(sys.coverage(*r.witness) >= p);
            CHECK(static_cast<int>(r.witness->size()) <= k);
          }
          CHECK(r.nodes_explored <= alg1_node_bound(sys, {k, p}));
          CHECK(r.max_children <= sys.max_cardinality() + 1);
          CHECK(r.stalled_steps == 0);
          CHECK(r.max_depth <= k + p + sys.max_cardinality() - 1);
        }
        CHECK(alg1_fpt_as_p(sys, {k, p}).feasible == (opt >= p));
        ++checked;
      }
    }
  }
  CHECK(checked > 1000);
}
