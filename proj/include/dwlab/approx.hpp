#pragma once

#include <optional>

#include "dwlab/tournament.hpp"

namespace dwlab {

struct ApproxResult {
  std::size_t width = 0;
  Ordering ordering;
};

/// Vertices by nondecreasing in-degree, ties by id; width <= 3 * degreewidth.
ApproxResult approx_degreewidth(const Tournament& t);

struct BoundsReport {
  std::size_t lower_min_indegree = 0;
  std::size_t upper_indegree_ordering = 0;
  std::size_t upper_2ctw = 0;
  std::optional<std::size_t> upper_fas;  // only when n fits the exact cap
};

/// `fas_cap` bounds the exact FAS run used for upper_fas.
BoundsReport degreewidth_bounds(const Tournament& t, std::size_t fas_cap);
BoundsReport degreewidth_bounds(const Tournament& t);

}  // namespace dwlab
