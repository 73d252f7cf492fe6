#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "parcov/errors.hpp"
#include "parcov/oracle.hpp"
#include "parcov/sat_fpt.hpp"

using namespace parcov;

namespace {

Literal pos(int v) { return {v - 1, true}; }
Literal neg(int v) { return {v - 1, false}; }

// (x1 v x2)(-x1 v x3)(x2)(-x3)
CnfFormula four_clauses() { return CnfFormula(3, {{pos(1), pos(2)}, {neg(1), pos(3)}, {pos(2)}, {neg(3)}}); }

CnfFormula random_formula(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int n = 1 + static_cast<int>(rng() % 10);
  int m = 1 + static_cast<int>(rng() % 10);
  int len = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(n, 4)));
  int f = std::max<int>((m + n - 1) / n, 1 + static_cast<int>(rng() % 6));
  return gen_cnf(n, m, len, f, seed);
}

}  // namespace

TEST_CASE("satk_exact examples") {
  SolveReport r = satk_exact(four_clauses(), {1, 4});
  REQUIRE(r.feasible);
  CHECK(*r.witness == std::vector<int>{1});
  CHECK(r.covered == 4);

  CnfFormula units(3, {{pos(1)}, {pos(2)}, {pos(3)}});
  CHECK_FALSE(satk_exact(units, {2, 3}).feasible);

  SolveReport none = satk_exact(four_clauses(), {0, four_clauses().count_negative_satisfied()});
  REQUIRE(none.feasible);
  CHECK(none.witness->empty());
}

TEST_CASE("satk_exact leaf DP cap") {
  std::vector<Clause> clauses;
  for (int i = 0; i < 23; ++i) clauses.push_back({Literal{i, true}});
  CnfFormula wide(23, clauses);
  CHECK_THROWS_AS(satk_exact(wide, {23, 23}), ResourceError);
  SatSearchOptions loose;
  loose.dp_cap = 23;
  CHECK(satk_exact(wide, {23, 23}, loose).feasible);
}

TEST_CASE("presolve rules") {
  SUBCASE("R1 all-false") {
    CnfFormula phi(2, {{neg(1)}, {neg(2)}, {neg(1), neg(2)}, {pos(1)}});
    PresolveResult r = presolve_rules(phi, {0, 3});
    CHECK(r.verdict == PresolveVerdict::kFeasible);
    CHECK(r.rule == PresolveRule::kAllFalse);
    CHECK(r.witness->empty());
  }
  SUBCASE("R2 high-frequency variable") {
    // x1 occurs in 6 clauses, 5 positively; the all-false assignment satisfies only 1 clause.
    CnfFormula phi(3, {{pos(1)}, {pos(1), pos(2)}, {pos(1), pos(3)}, {pos(1)}, {pos(1), pos(2)}, {neg(1), pos(3)}});
    REQUIRE(phi.max_frequency() == 6);
    REQUIRE(phi.count_negative_satisfied() == 1);
    std::vector<int> x1{0};
    REQUIRE(phi.count_satisfied(x1) == 5);
    PresolveResult r = presolve_rules(phi, {1, 2});
    CHECK(r.verdict == PresolveVerdict::kFeasible);
    CHECK(r.rule == PresolveRule::kHighFrequency);
    CHECK(*r.witness == std::vector<int>{0});
  }
  SUBCASE("R2 falls through without budget") {
    CnfFormula phi(1, {{pos(1)}, {pos(1)}, {pos(1)}, {pos(1)}, {pos(1)}});
    PresolveResult r = presolve_rules(phi, {0, 2});
    CHECK(r.verdict == PresolveVerdict::kPass);
    CHECK_FALSE(solve_sat_pipeline(phi, {0, 2}).report.feasible);
  }
  SUBCASE("R3 small target") {
    CnfFormula phi(4, {{pos(1)}, {pos(2)}, {pos(3)}, {pos(4)}, {pos(1), pos(2)}, {pos(3), pos(4)}, {pos(1), pos(4)},
                       {pos(2), pos(3)}, {pos(1), pos(3)}, {pos(2), pos(4)}, {pos(4)}, {pos(3)}});
    PresolveResult r = presolve_rules(phi, {4, 3});
    CHECK(r.verdict == PresolveVerdict::kFeasible);
    CHECK(r.rule == PresolveRule::kSmallTarget);
    CHECK(phi.count_satisfied(*r.witness) >= 3);
  }
  SUBCASE("R4 delegates") {
    PresolveResult r = presolve_rules(four_clauses(), {1, 4});
    CHECK(r.rule == PresolveRule::kDelegateExact);
    CHECK(r.verdict == PresolveVerdict::kFeasible);
    PresolveResult no = presolve_rules(CnfFormula(3, {{pos(1)}, {pos(2)}, {pos(3)}}), {2, 3});
    CHECK(no.rule == PresolveRule::kDelegateExact);
    CHECK(no.verdict == PresolveVerdict::kInfeasible);
  }
}

TEST_CASE("alg2_solve examples") {
  CnfFormula pairs(3, {{pos(1), pos(2)}, {pos(1), pos(3)}, {pos(2), pos(3)}});
  SolveReport r = alg2_solve(pairs, {1, 2});
  REQUIRE(r.feasible);
  CHECK(*r.witness == std::vector<int>{0});

  CnfFormula units(4, {{pos(1)}, {pos(2)}, {pos(3)}, {pos(4)}});
  CHECK_FALSE(alg2_solve(units, {2, 3}).feasible);

  SolveReport zero = alg2_solve(units, {2, 0});
  REQUIRE(zero.feasible);
  CHECK(zero.witness->empty());
}

TEST_CASE("SAT solvers match the oracle on random formulas") {
  int alg2_runs = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    CnfFormula phi = random_formula(seed);
    for (int k = 0; k <= std::min(4, phi.n_vars()); ++k) {
      int opt = oracle::brute_max_sat(phi, k).value;
      for (int p = 0; p <= phi.m(); ++p) {
        CAPTURE(seed);
        CAPTURE(k);
        CAPTURE(p);
        SatQuery q{k, p};
        SolveReport exact = satk_exact(phi, q);
        REQUIRE(exact.feasible == (opt >= p));
        CHECK(exact.stalled_steps == 0);

        SatPipelineResult pipe = solve_sat_pipeline(phi, q);
        REQUIRE(pipe.report.feasible == (opt >= p));
        if (pipe.presolve.verdict == PresolveVerdict::kFeasible) {
          CHECK(phi.count_satisfied(*pipe.presolve.witness) >= p);
          CHECK(static_cast<int>(pipe.presolve.witness->size()) <= k);
        }
        if (pipe.presolve.verdict == PresolveVerdict::kPass) {
          ++alg2_runs;
          CHECK(pipe.report.nodes_explored <= alg2_node_bound(phi, q));
          CHECK(pipe.report.max_children <= phi.max_frequency() + 1);
          CHECK(pipe.report.stalled_steps == 0);
        }
        for (const SolveReport* rep : {&exact, &pipe.report}) {
          if (rep->feasible) {
            CHECK(phi.count_satisfied(*rep->witness) >= p);
            CHECK(static_cast<int>(rep->witness->size()) <= k);
          }
        }
      }
    }
  }
  CHECK(alg2_runs > 50);
}

TEST_CASE("alg2 tie-break never changes the verdict") {
  SatSearchOptions inverted;
  inverted.tie_break = TieBreak::kLargestIndex;
  for (std::uint64_t seed = 1000; seed < 1150; ++seed) {
    CnfFormula phi = random_formula(seed);
    for (int k = 0; k <= std::min(3, phi.n_vars()); ++k) {
      for (int p = 0; p <= phi.m(); ++p) {
        CAPTURE(seed);
        CHECK(solve_sat_pipeline(phi, {k, p}, inverted).report.feasible == solve_sat_pipeline(phi, {k, p}).report.feasible);
        CHECK(satk_exact(phi, {k, p}, inverted).feasible == satk_exact(phi, {k, p}).feasible);
      }
    }
  }
}
