#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "parcov/cover_fpt.hpp"
#include "parcov/oracle.hpp"
#include "parcov/reductions.hpp"

using namespace parcov;

namespace {

Graph path3() { return Graph(3, {{0, 1}, {1, 2}}); }
Graph cycle4() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

}  // namespace

TEST_CASE("ds_to_psc examples") {
  auto [sys, q] = ds_to_psc(path3(), {1, 3});
  CHECK(sys.sets() == std::vector<std::vector<int>>{{0, 1}, {0, 1, 2}, {1, 2}});
  CHECK(q.k == 1);
  CHECK(q.p == 3);
  CHECK(sys.max_cardinality() == path3().max_degree() + 1);

  auto empty = ds_to_psc(Graph(3, {}), {1, 1}).first;
  CHECK(empty.sets() == std::vector<std::vector<int>>{{0}, {1}, {2}});

  auto star = ds_to_psc(Graph(4, {{0, 1}, {0, 2}, {0, 3}}), {1, 4}).first;
  CHECK(star.max_cardinality() == 4);
  CHECK(alg1_solve(star, {1, 4}).feasible);
}

TEST_CASE("pvc_to_psc examples") {
  auto [tri, q] = pvc_to_psc(Graph(3, {{0, 1}, {0, 2}, {1, 2}}), {1, 2});
  CHECK(tri.n() == 3);
  CHECK(tri.sets() == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(tri.max_frequency() == 2);
  CHECK(alg1_solve(tri, q).feasible);
  CHECK_FALSE(alg1_solve(tri, {1, 3}).feasible);

  auto edge = pvc_to_psc(Graph(2, {{0, 1}}), {1, 1}).first;
  CHECK(edge.sets() == std::vector<std::vector<int>>{{0}, {0}});

  auto none = pvc_to_psc(Graph(2, {}), {0, 0}).first;
  CHECK(none.n() == 0);
  CHECK(none.max_frequency() == 0);
}

TEST_CASE("value preservation on small graphs") {
  for (const Graph& g : {path3(), cycle4()}) {
    for (int k = 0; k <= 2; ++k) {
      for (int p = 0; p <= g.n(); ++p) {
        bool original = oracle::brute_max_domination(g, k).value >= p;
        auto [sys, q] = ds_to_psc(g, {k, p});
        CHECK(check_value_preservation(original, alg1_solve(sys, q).feasible));
      }
      for (int p = 0; p <= static_cast<int>(g.edges().size()); ++p) {
        bool original = oracle::brute_max_edge_cover(g, k).value >= p;
        auto [sys, q] = pvc_to_psc(g, {k, p});
        CHECK(check_value_preservation(original, alg1_solve(sys, q).feasible));
      }
    }
  }
  CHECK_FALSE(check_value_preservation(true, false));
}

TEST_CASE("a corrupted image is caught") {
  // Open neighbourhoods drop the vertex itself; P3 with k=1 then covers only 2.
  Graph g = path3();
  std::vector<std::vector<int>> open;
  for (int v = 0; v < g.n(); ++v) open.emplace_back(g.neighbors(v).begin(), g.neighbors(v).end());
  SetSystem bad(g.n(), open);
  bool original = oracle::brute_max_domination(g, 1).value >= 3;
  CHECK(original);
  CHECK_FALSE(check_value_preservation(original, alg1_solve(bad, {1, 3}).feasible));
}

TEST_CASE("reductions keep values on random graphs") {
  for (std::uint64_t seed = 0; seed < 250; ++seed) {
    Graph g = gen_graph(1 + static_cast<int>(seed % 8), 0.1 + 0.1 * static_cast<double>(seed % 7), seed);
    CAPTURE(seed);
    auto ds = ds_to_psc(g, {0, 0}).first;
    auto pvc = pvc_to_psc(g, {0, 0}).first;
    CHECK(ds.max_cardinality() == g.max_degree() + 1);
    CHECK(pvc.max_frequency() <= 2);
    CHECK(pvc.max_cardinality() == g.max_degree());
    for (int k = 0; k <= std::min(3, g.n()); ++k) {
      CHECK(oracle::brute_max_domination(g, k).value == oracle::brute_max_cover(ds, k).value);
      CHECK(oracle::brute_max_edge_cover(g, k).value == oracle::brute_max_cover(pvc, k).value);
    }
  }
}
