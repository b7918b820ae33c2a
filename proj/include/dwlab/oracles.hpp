#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dwlab/tournament.hpp"

namespace dwlab {

inline constexpr std::size_t kDefaultExactCap = 22;
inline constexpr std::size_t kDefaultDominatingSetCap = 24;
inline constexpr std::size_t kBruteOrderingCap = 9;

/// DWLAB_EXACT_CAP if set (must parse as an integer in [1, 30]), else 22.
std::size_t configured_exact_cap();

struct OrderingResult {
  std::size_t value = 0;
  Ordering witness;
  std::uint64_t explored = 0;
};

struct SetResult {
  std::size_t value = 0;
  VertexSet witness;
  std::uint64_t explored = 0;
};

/// Subset DP over placed prefixes; O(n 2^n) time, 2^n bytes.
/// Throws CapExceeded when n > cap.
OrderingResult exact_degreewidth(const Tournament& t, std::size_t cap = configured_exact_cap());
OrderingResult exact_fas(const Tournament& t, std::size_t cap = configured_exact_cap());
/// Smallest set S with every v outside S having an out-neighbour in S.
SetResult exact_min_ds(const Tournament& t, std::size_t cap = kDefaultDominatingSetCap);

/// Some X with |X| <= k and T - X acyclic, by branching on the least triangle.
std::optional<VertexSet> exact_fvst(const Tournament& t, std::size_t k);

/// All orderings of width <= 1, lexicographic by vertex sequence.
std::vector<Ordering> brute_sparse_orderings(const Tournament& t, std::size_t cap = kBruteOrderingCap);

struct CutwidthResult {
  std::size_t value = 0;
  Ordering ordering;
};

/// In-degree order (ties by id) and its widest prefix cut.
CutwidthResult cutwidth_tournament(const Tournament& t);

/// Single-threaded reference versions of the parallel kernels above.
namespace serial {
OrderingResult exact_degreewidth(const Tournament& t, std::size_t cap = configured_exact_cap());
OrderingResult exact_fas(const Tournament& t, std::size_t cap = configured_exact_cap());
SetResult exact_min_ds(const Tournament& t, std::size_t cap = kDefaultDominatingSetCap);
}  // namespace serial

}  // namespace dwlab
