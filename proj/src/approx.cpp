#include "dwlab/approx.hpp"

#include <algorithm>
#include <numeric>

#include "dwlab/error.hpp"
#include "dwlab/oracles.hpp"

namespace dwlab {

ApproxResult approx_degreewidth(const Tournament& t) {
  std::vector<Vertex> perm(t.size());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::stable_sort(perm.begin(), perm.end(), [&](Vertex a, Vertex b) { return t.in_degree(a) < t.in_degree(b); });
  ApproxResult r;
  r.ordering = Ordering(std::move(perm));
  r.width = backward_profile(t, r.ordering).width;
  return r;
}

BoundsReport degreewidth_bounds(const Tournament& t, std::size_t fas_cap) {
  BoundsReport r;
  r.lower_min_indegree = t.min_in_degree();
  const ApproxResult a = approx_degreewidth(t);
  r.upper_indegree_ordering = a.width;
  r.upper_2ctw = 2 * backward_profile(t, a.ordering).max_cut;
  if (t.size() <= fas_cap) r.upper_fas = exact_fas(t, fas_cap).value;

  bool ok = r.lower_min_indegree <= r.upper_indegree_ordering && r.lower_min_indegree <= r.upper_2ctw;
  if (r.upper_fas) ok = ok && r.lower_min_indegree <= *r.upper_fas;
  if (!ok) throw Error("degreewidth_bounds: lower bound exceeds an upper bound");
  return r;
}

BoundsReport degreewidth_bounds(const Tournament& t) { return degreewidth_bounds(t, configured_exact_cap()); }

}  // namespace dwlab
