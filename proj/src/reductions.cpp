#include "parcov/reductions.hpp"

namespace parcov {

std::pair<SetSystem, CoverQuery> ds_to_psc(const Graph& g, const CoverQuery& q) {
  std::vector<std::vector<int>> sets(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) {
    auto& closed = sets[static_cast<std::size_t>(v)];
    closed.push_back(v);
    for (int u : g.neighbors(v)) closed.push_back(u);
  }
  return {SetSystem(g.n(), std::move(sets)), q};
}

std::pair<SetSystem, CoverQuery> pvc_to_psc(const Graph& g, const CoverQuery& q) {
  std::vector<std::vector<int>> stars(static_cast<std::size_t>(g.n()));
  const auto& edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    stars[static_cast<std::size_t>(edges[e].first)].push_back(static_cast<int>(e));
    stars[static_cast<std::size_t>(edges[e].second)].push_back(static_cast<int>(e));
  }
  return {SetSystem(static_cast<int>(edges.size()), std::move(stars)), q};
}

bool check_value_preservation(bool original_feasible, bool image_feasible) noexcept {
  return original_feasible == image_feasible;
}

}  // namespace parcov
