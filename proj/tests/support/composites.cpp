#include "composites.hpp"

#include <algorithm>
#include <numeric>

#include "dwlab/generators.hpp"
#include "dwlab/random.hpp"

namespace composites {

using dwlab::Tournament;
using dwlab::Vertex;

Tournament relabel(const Tournament& t, const std::vector<Vertex>& new_id) {
  dwlab::TournamentBuilder b(t.size());
  for (const auto& [u, v] : t.arcs()) b.orient(new_id[u], new_id[v]);
  return b.build();
}

namespace {

std::size_t pick(dwlab::Xorshift64Star& rng, std::size_t lo, std::size_t hi) { return lo + rng.below(hi - lo + 1); }

Tournament assemble(dwlab::Xorshift64Star& rng, std::size_t n_target, std::size_t max_block, std::size_t overrides,
                    bool shuffle) {
  std::vector<Tournament> blocks;
  std::vector<std::size_t> start;
  std::size_t n = 0;
  while (n < n_target) {
    std::size_t k = pick(rng, 1, max_block);
    k = std::min(k, n_target - n);
    start.push_back(n);
    blocks.push_back(k == 1 ? dwlab::acyclic(1) : dwlab::u_tournament(k));
    n += k;
  }
  std::vector<dwlab::Override> over;
  if (blocks.size() >= 2) {
    for (std::size_t i = 0; i < overrides; ++i) {
      const std::size_t a = pick(rng, 0, blocks.size() - 2);
      const std::size_t b = pick(rng, a + 1, blocks.size() - 1);
      const Vertex head = start[a] + pick(rng, 0, blocks[a].size() - 1);
      const Vertex tail = start[b] + pick(rng, 0, blocks[b].size() - 1);
      over.push_back({tail, head});
    }
  }
  Tournament t = dwlab::dominate_join(blocks, over);
  if (!shuffle) return t;
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  return relabel(t, perm);
}

}  // namespace

Tournament u_composite(std::uint64_t seed, const Params& params) {
  dwlab::Xorshift64Star rng(seed);
  const std::size_t n = pick(rng, 1, params.max_n);
  const std::size_t over = pick(rng, 0, params.max_overrides);
  return assemble(rng, n, params.max_block, over, true);
}

Tournament chain_composite(std::size_t n, std::uint64_t seed) {
  dwlab::Xorshift64Star rng(seed);
  return assemble(rng, n, 9, 0, true);
}

}  // namespace composites
