#pragma once

#include <cstdint>

#include "parcov/instances.hpp"

// Seeded instance families shared by verify, bench and the acceptance driver.
namespace parcov::suites {

// n <= 12, m <= 8, Delta <= 4.
SetSystem small_cover(std::uint64_t seed);

// n_vars <= 10, m <= 10, clause length <= 4.
CnfFormula small_cnf(std::uint64_t seed);

// small_cnf with every literal made positive, so presolve rarely settles it.
CnfFormula positive_cnf(std::uint64_t seed);

// 1..8 vertices, edge probability drawn per graph.
Graph small_graph(std::uint64_t seed);

struct PlantedCover {
  SetSystem sys;
  int k0 = 0;  // size of the planted partition, so k0 >= min set cover
};

// n in [2, n_max]: a random partition into k0 blocks plus noise sets.
PlantedCover planted_cover(std::uint64_t seed, int n_max = 1000);

}  // namespace parcov::suites
