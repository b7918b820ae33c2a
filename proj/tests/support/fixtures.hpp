#pragma once

#include "dwlab/reductions.hpp"

namespace fixtures {

/// (x1 | x2 | x3)(x1 | !x2 | !x3)(!x1 | x2 | !x3)(!x1 | !x2 | x3)
dwlab::Balanced3Sat4 canonical_formula();

dwlab::CubicGraph k4();
dwlab::CubicGraph k33();
/// Triangular prism: two triangles joined by a matching.
dwlab::CubicGraph prism();
/// Disjoint union of two K4.
dwlab::CubicGraph two_k4();

/// Minimum vertex cover size by subset enumeration.
std::size_t min_vertex_cover(const dwlab::CubicGraph& g);

}  // namespace fixtures
