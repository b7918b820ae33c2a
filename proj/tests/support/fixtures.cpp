#include "support/fixtures.hpp"

#include <algorithm>
#include <bit>

namespace fixtures {

using namespace dwlab;

Balanced3Sat4 canonical_formula() {
  auto lit = [](std::size_t v, bool p) { return Literal{v, p}; };
  return {3,
          {{lit(0, true), lit(1, true), lit(2, true)},
           {lit(0, true), lit(1, false), lit(2, false)},
           {lit(0, false), lit(1, true), lit(2, false)},
           {lit(0, false), lit(1, false), lit(2, true)}}};
}

CubicGraph k4() { return make_cubic_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

CubicGraph k33() {
  std::vector<Edge> e;
  for (Vertex a = 0; a < 3; ++a)
    for (Vertex b = 3; b < 6; ++b) e.push_back({a, b});
  return make_cubic_graph(6, e);
}

CubicGraph prism() {
  return make_cubic_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

CubicGraph two_k4() {
  std::vector<Edge> e;
  for (Vertex off : {0, 4})
    for (Vertex a = 0; a < 4; ++a)
      for (Vertex b = a + 1; b < 4; ++b) e.push_back({off + a, off + b});
  return make_cubic_graph(8, e);
}

std::size_t min_vertex_cover(const CubicGraph& g) {
  std::size_t best = g.n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.n); ++mask) {
    bool ok = true;
    for (const auto& [a, b] : g.edges)
      if (((mask >> a) & 1U) == 0 && ((mask >> b) & 1U) == 0) ok = false;
    if (ok) best = std::min<std::size_t>(best, static_cast<std::size_t>(std::popcount(mask)));
  }
  return best;
}

}  // namespace fixtures
