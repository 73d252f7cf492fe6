#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "parcov/approx.hpp"
#include "parcov/errors.hpp"
#include "parcov/oracle.hpp"

using namespace parcov;

namespace {

SetSystem random_system(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int n = 1 + static_cast<int>(rng() % 12);
  int m = 1 + static_cast<int>(rng() % 8);
  int delta = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(n, 4)));
  int f = std::max<int>((m + n - 1) / n, 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(m)));
  return gen_set_system(n, m, delta, f, seed);
}

PartialCoverSolver greedy_solver() {
  return [](const SetSystem& s, int budget) { return greedy_max_coverage(s, budget).witness; };
}

}  // namespace

TEST_CASE("greedy_max_coverage examples") {
  SetSystem sys(5, {{0, 1, 2}, {0, 3}, {1, 4}});
  CoverResult r = greedy_max_coverage(sys, 2);
  CHECK(r.covered == 4);
  CHECK(r.witness == std::vector<int>{0, 1});

  CHECK(greedy_max_coverage(sys, 0).witness.empty());
  // Stops once nothing is gained.
  CHECK(greedy_max_coverage(SetSystem(2, {{0, 1}, {0}, {1}}), 3).witness == std::vector<int>{0});

  CoverResult last = greedy_max_coverage(SetSystem(2, {{0}, {1}}), 1, TieBreak::kLargestIndex);
  CHECK(last.witness == std::vector<int>{1});
}

TEST_CASE("greedy keeps the 1 - 1/e ratio") {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    SetSystem sys = random_system(seed);
    for (int k = 0; k <= std::min(4, sys.m()); ++k) {
      CAPTURE(seed);
      CAPTURE(k);
      int opt = oracle::brute_max_cover(sys, k).value;
      CoverResult g = greedy_max_coverage(sys, k);
      CHECK(std::numbers::e * g.covered >= (std::numbers::e - 1.0) * opt - 1e-9);
      CHECK(sys.coverage(g.witness) == g.covered);
      CHECK(static_cast<int>(g.witness.size()) <= k);
    }
  }
}

TEST_CASE("ratio_guarantee closed form") {
  CHECK(ratio_guarantee(0.5) == doctest::Approx(0.65803).epsilon(1e-5));
  CHECK(ratio_guarantee(0.5) >= 0.6580);
  CHECK(ratio_guarantee(1.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(HybridParams::mu_lower_bound() == doctest::Approx(0.41802).epsilon(1e-4));

  double previous = ratio_guarantee(HybridParams::mu_lower_bound());
  CHECK(previous == doctest::Approx(1.0 - 1.0 / std::numbers::e).epsilon(1e-9));
  for (int step = 1; step <= 100; ++step) {
    double mu = HybridParams::mu_lower_bound() + (1.0 - HybridParams::mu_lower_bound()) * step / 100.0;
    double g = ratio_guarantee(mu);
    CHECK(g > previous);
    previous = g;
    if (mu <= 1.0) CHECK(HybridParams(std::min(mu, 1.0)).epsilon_claim() > 0.0);
  }
}

TEST_CASE("HybridParams validation") {
  CHECK_THROWS_AS(HybridParams(0.4), InputError);
  CHECK_THROWS_AS(HybridParams(1.01), InputError);
  CHECK_THROWS_AS(HybridParams(std::nan("")), InputError);
  CHECK_NOTHROW(HybridParams(0.42));
  CHECK_NOTHROW(HybridParams(1.0));

  SetSystem sys(4, {{0}, {1}, {2}, {3}});
  CHECK_THROWS_AS(pscschema(sys, 1, HybridParams(0.5)), InputError);
  CHECK_THROWS_AS(pscschema(sys, 5, HybridParams(0.5)), InputError);
}

TEST_CASE("pscschema budget split") {
  SetSystem sys(6, {{0, 1}, {2, 3}, {4, 5}, {0, 2, 4}});
  HybridResult h = pscschema(sys, 4, HybridParams(0.5));
  CHECK(h.k_exact == 2);
  CHECK(h.k_greedy == 2);
  CHECK(h.covered == 6);

  HybridResult seven = pscschema(gen_set_system(20, 10, 4, 10, 3), 10, HybridParams(0.7), ExactEngine::kBrute);
  CHECK(seven.k_exact == 7);
  CHECK(seven.k_greedy == 3);

  HybridResult odd = pscschema(sys, 3, HybridParams(0.5));
  CHECK(odd.k_exact == 2);
  CHECK(odd.k_greedy == 1);
}

TEST_CASE("pscschema meets its guarantee") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    SetSystem sys = random_system(seed);
    for (int k = 1; k <= std::min(4, sys.m()); ++k) {
      int opt = oracle::brute_max_cover(sys, k).value;
      for (double mu : {0.45, 0.5, 0.7, 1.0}) {
        if (mu * k < 1.0) continue;
        CAPTURE(seed);
        CAPTURE(k);
        CAPTURE(mu);
        for (ExactEngine engine : {ExactEngine::kBranch, ExactEngine::kBrute}) {
          HybridResult h = pscschema(sys, k, HybridParams(mu), engine);
          CHECK(h.covered >= ratio_guarantee(mu) * opt - 1e-9);
          CHECK(sys.coverage(h.witness) == h.covered);
          CHECK(static_cast<int>(h.witness.size()) <= k);
          CHECK(h.exact_covered == oracle::brute_max_cover(sys, h.k_exact).value);
          if (mu == 1.0) CHECK(h.covered == opt);
        }
      }
    }
  }
}

TEST_CASE("iteration_bound") {
  CHECK(iteration_bound(1000, 1.0 - 1.0 / std::numbers::e) == 7);
  CHECK(iteration_bound(1, 0.5) == 0);
  CHECK(iteration_bound(10, 0.5) == 4);
  CHECK_THROWS_AS(iteration_bound(0, 0.5), InputError);
  CHECK_THROWS_AS(iteration_bound(5, 1.0), InputError);
}

TEST_CASE("iterated_set_cover examples") {
  std::vector<std::vector<int>> singles;
  for (int i = 0; i < 6; ++i) singles.push_back({i});
  auto all = iterated_set_cover(SetSystem(6, singles), greedy_solver(), 6);
  REQUIRE(all);
  CHECK(all->iterations == 1);
  CHECK(all->cover.size() == 6);

  auto chain = iterated_set_cover(SetSystem(4, {{0, 1}, {1, 2}, {2, 3}}), greedy_solver(), 2);
  REQUIRE(chain);
  CHECK(chain->iterations == 1);
  CHECK(chain->cover == std::vector<int>{0, 2});

  auto rounds = iterated_set_cover(SetSystem(4, {{0, 1}, {1, 2}, {2, 3}}), greedy_solver(), 1);
  REQUIRE(rounds);
  CHECK(rounds->iterations == 2);
  CHECK(rounds->remaining_after == std::vector<int>{2, 0});

  CHECK_FALSE(iterated_set_cover(SetSystem(3, {{0}, {1}}), greedy_solver(), 2));
  CHECK_THROWS_AS(iterated_set_cover(SetSystem(1, {{0}}), greedy_solver(), 0), InputError);
}

TEST_CASE("iterated_set_cover stays within ceil(ln n) rounds when k0 bounds the optimum") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    SetSystem sys = random_system(seed + 5000);
    auto best = oracle::brute_min_set_cover(sys);
    if (!best || sys.n() < 2) continue;
    CAPTURE(seed);
    auto it = iterated_set_cover(sys, greedy_solver(), best->value);
    REQUIRE(it);
    CHECK(it->iterations <= static_cast<int>(std::ceil(std::log(sys.n()))));
    CHECK(sys.coverage(it->cover) == sys.n());
  }
}
