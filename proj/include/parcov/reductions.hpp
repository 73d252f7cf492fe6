#pragma once

#include <utility>

#include "parcov/instances.hpp"

namespace parcov {

/// Partial dominating set as partial set cover: one set N[v] per vertex over
/// the vertex universe. The query passes through unchanged; the image has
/// Delta = maxdeg + 1.
std::pair<SetSystem, CoverQuery> ds_to_psc(const Graph& g, const CoverQuery& q);

/// Partial vertex cover as partial set cover: one element per edge (in edge
/// order), one set per vertex holding its incident edges. The image has
/// frequency 2 whenever g has an edge and Delta = maxdeg.
std::pair<SetSystem, CoverQuery> pvc_to_psc(const Graph& g, const CoverQuery& q);

/// True iff the verdicts on the original instance and its image agree.
bool check_value_preservation(bool original_feasible, bool image_feasible) noexcept;

}  // namespace parcov
