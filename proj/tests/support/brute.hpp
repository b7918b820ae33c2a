#pragma once

// Brute-force reference answers used by the tests. Nothing here shares code
// with the library solvers beyond the Tournament/Ordering types and
// backward_profile.

#include <cstdint>
#include <optional>
#include <vector>

#include "dwlab/tournament.hpp"

namespace brute {

using dwlab::Ordering;
using dwlab::Tournament;
using dwlab::Vertex;

/// Tournament number `code` on n vertices: bit b of `code` orients the b-th
/// pair (i < j, lexicographic), 1 meaning i -> j.
Tournament from_code(std::size_t n, std::uint64_t code);
std::uint64_t pair_count(std::size_t n);

std::size_t width_of(const Tournament& t, const std::vector<Vertex>& perm);
std::size_t backward_count(const Tournament& t, const std::vector<Vertex>& perm);

/// Minimum over all n! permutations.
std::size_t degreewidth(const Tournament& t);
std::size_t fas(const Tournament& t);
std::size_t cutwidth(const Tournament& t);
std::vector<std::vector<Vertex>> sparse_orderings(const Tournament& t);

/// Smallest |S| such that each v outside S has an out-neighbour in S.
std::size_t min_dominating_set(const Tournament& t);
bool has_dominating_set_of_size(const Tournament& t, std::size_t s);

/// Some X, |X| <= k, T - X triangle-free (all triples checked).
bool has_fvs(const Tournament& t, std::size_t k);

bool has_directed_triangle(const Tournament& t, const std::vector<bool>& removed);

/// Reachability-based strongly connected components (Floyd-Warshall closure).
std::vector<int> component_ids(const Tournament& t, const std::vector<Vertex>& members);

std::vector<Vertex> random_permutation(std::size_t n, std::uint64_t seed);

}  // namespace brute
