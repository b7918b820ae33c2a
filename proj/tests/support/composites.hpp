#pragma once

// Seeded sparse-looking instances: U-blocks joined by domination, a few
// reversed cross arcs, then a random relabelling.

#include <cstdint>
#include <vector>

#include "dwlab/tournament.hpp"

namespace composites {

struct Params {
  std::size_t max_n = 20;
  std::size_t max_block = 7;
  std::size_t max_overrides = 2;
};

dwlab::Tournament relabel(const dwlab::Tournament& t, const std::vector<dwlab::Vertex>& new_id);

/// Blocks drawn from U_k (k >= 2) and single vertices.
dwlab::Tournament u_composite(std::uint64_t seed, const Params& params);

/// Long U-chain composite used for runtime scaling (no relabelling noise beyond a shuffle).
dwlab::Tournament chain_composite(std::size_t n, std::uint64_t seed);

}  // namespace composites
