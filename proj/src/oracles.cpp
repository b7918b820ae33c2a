#include "dwlab/oracles.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <limits>
#include <string>

#include "dwlab/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dwlab {
namespace {

constexpr std::size_t kHardCap = 30;

using Mask = std::uint64_t;

void check_cap(const char* what, std::size_t n, std::size_t cap) {
  if (n > cap) throw CapExceeded(what, n, cap);
  if (n > kHardCap) throw CapExceeded(what, n, kHardCap);
}

std::vector<Mask> out_masks(const Tournament& t) {
  std::vector<Mask> m(t.size());
  for (Vertex v = 0; v < t.size(); ++v) m[v] = t.out_mask(v);
  return m;
}

// Backward degree of v when appended after the placed set p.
struct DegreewidthStep {
  std::size_t n;
  const std::vector<Mask>& out;
  unsigned cost(Vertex v, Mask p) const {
    const auto placed = static_cast<unsigned>(std::popcount(p));
    const auto ahead = static_cast<unsigned>(std::popcount(out[v] & p));
    const auto outdeg = static_cast<unsigned>(std::popcount(out[v]));
    return 2 * ahead + static_cast<unsigned>(n - 1) - placed - outdeg;
  }
  template <class V>
  V combine(V prev, Vertex v, Mask p) const {
    return static_cast<V>(std::max<unsigned>(prev, cost(v, p)));
  }
};

// Backward arcs gained when v is appended after p.
struct FasStep {
  std::size_t n;
  const std::vector<Mask>& out;
  template <class V>
  V combine(V prev, Vertex v, Mask p) const {
    return static_cast<V>(prev + static_cast<unsigned>(std::popcount(out[v] & p)));
  }
};

template <class V, class Step>
V relax(const std::vector<V>& table, const Step& step, Mask s) {
  V best = std::numeric_limits<V>::max();
  Mask rest = s;
  while (rest != 0) {
    const auto v = static_cast<Vertex>(std::countr_zero(rest));
    rest &= rest - 1;
    const Mask p = s & ~(Mask{1} << v);
    best = std::min(best, step.template combine<V>(table[p], v, p));
  }
  return best;
}

template <class V, class Step>
Ordering recover(const std::vector<V>& table, const Step& step, std::size_t n) {
  std::vector<Vertex> perm(n);
  Mask s = (n == 64) ? ~Mask{0} : (Mask{1} << n) - 1;
  for (std::size_t slot = n; slot-- > 0;) {
    Mask rest = s;
    while (rest != 0) {
      const auto v = static_cast<Vertex>(std::countr_zero(rest));
      rest &= rest - 1;
      const Mask p = s & ~(Mask{1} << v);
      if (step.template combine<V>(table[p], v, p) == table[s]) {
        perm[slot] = v;
        s = p;
        break;
      }
    }
  }
  return Ordering(std::move(perm));
}

template <class V, class Step>
OrderingResult solve_serial(const Step& step, std::size_t n) {
  const Mask full = Mask{1} << n;
  std::vector<V> table(full, 0);
  for (Mask s = 1; s < full; ++s) table[s] = relax(table, step, s);
  OrderingResult r;
  r.value = table[full - 1];
  r.witness = recover(table, step, n);
  r.explored = full;
  return r;
}

// All masks of [0, 2^n) grouped by popcount, ascending inside each group.
struct Layers {
  std::vector<std::uint32_t> masks;
  std::vector<std::size_t> begin;  // begin[k] .. begin[k+1]
};

Layers popcount_layers(std::size_t n) {
  const Mask full = Mask{1} << n;
  Layers l;
  l.begin.assign(n + 2, 0);
  for (Mask s = 0; s < full; ++s) ++l.begin[static_cast<std::size_t>(std::popcount(s)) + 1];
  for (std::size_t k = 1; k < l.begin.size(); ++k) l.begin[k] += l.begin[k - 1];
  std::vector<std::size_t> fill(l.begin.begin(), l.begin.end() - 1);
  l.masks.resize(full);
  for (Mask s = 0; s < full; ++s) l.masks[fill[static_cast<std::size_t>(std::popcount(s))]++] = static_cast<std::uint32_t>(s);
  return l;
}

template <class V, class Step>
OrderingResult solve_layered(const Step& step, std::size_t n) {
  const Mask full = Mask{1} << n;
  std::vector<V> table(full, 0);
  const Layers layers = popcount_layers(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const auto lo = static_cast<std::ptrdiff_t>(layers.begin[k]);
    const auto hi = static_cast<std::ptrdiff_t>(layers.begin[k + 1]);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = lo; i < hi; ++i) {
      const Mask s = layers.masks[static_cast<std::size_t>(i)];
      table[s] = relax(table, step, s);
    }
  }
  OrderingResult r;
  r.value = table[full - 1];
  r.witness = recover(table, step, n);
  r.explored = full;
  return r;
}

std::vector<Mask> in_masks(const Tournament& t) {
  const std::size_t n = t.size();
  const Mask all = (Mask{1} << n) - 1;
  std::vector<Mask> m(n);
  for (Vertex v = 0; v < n; ++v) m[v] = all & ~t.out_mask(v) & ~(Mask{1} << v);
  return m;
}

// Every vertex outside s has an out-neighbour in s, i.e. lies in N-(u) for some u in s.
bool dominating_mask(const std::vector<Mask>& in, Mask all, Mask s) {
  Mask covered = s;
  for (Mask rest = s; rest != 0; rest &= rest - 1) covered |= in[static_cast<std::size_t>(std::countr_zero(rest))];
  return covered == all;
}

VertexSet mask_to_set(std::size_t n, Mask m) {
  VertexSet s(n);
  for (; m != 0; m &= m - 1) s.insert(static_cast<Vertex>(std::countr_zero(m)));
  return s;
}

}  // namespace

std::size_t configured_exact_cap() {
  const char* env = std::getenv("DWLAB_EXACT_CAP");
  if (env == nullptr || *env == '\0') return kDefaultExactCap;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v < 1 || v > kHardCap)
    throw InvalidInput(std::string("DWLAB_EXACT_CAP must be an integer in [1, ") + std::to_string(kHardCap) +
                       "], got '" + env + "'");
  return v;
}

namespace serial {

OrderingResult exact_degreewidth(const Tournament& t, std::size_t cap) {
  check_cap("exact_degreewidth", t.size(), cap);
  const auto out = out_masks(t);
  return solve_serial<std::uint8_t>(DegreewidthStep{t.size(), out}, t.size());
}

OrderingResult exact_fas(const Tournament& t, std::size_t cap) {
  check_cap("exact_fas", t.size(), cap);
  const auto out = out_masks(t);
  return solve_serial<std::uint16_t>(FasStep{t.size(), out}, t.size());
}

SetResult exact_min_ds(const Tournament& t, std::size_t cap) {
  check_cap("exact_min_ds", t.size(), cap);
  const std::size_t n = t.size();
  const auto in = in_masks(t);
  const Mask all = (Mask{1} << n) - 1;
  SetResult r;
  for (std::size_t k = 1; k <= n; ++k) {
    // Gosper's hack: k-subsets in increasing numeric order.
    Mask s = (Mask{1} << k) - 1;
    while (s <= all) {
      ++r.explored;
      if (dominating_mask(in, all, s)) {
        r.value = k;
        r.witness = mask_to_set(n, s);
        return r;
      }
      const Mask c = s & (~s + 1);
      const Mask carry = s + c;
      s = (((carry ^ s) >> 2) / c) | carry;
    }
  }
  throw Error("exact_min_ds: no dominating set found");  // unreachable: V dominates
}

}  // namespace serial

OrderingResult exact_degreewidth(const Tournament& t, std::size_t cap) {
  check_cap("exact_degreewidth", t.size(), cap);
  const auto out = out_masks(t);
  return solve_layered<std::uint8_t>(DegreewidthStep{t.size(), out}, t.size());
}

OrderingResult exact_fas(const Tournament& t, std::size_t cap) {
  check_cap("exact_fas", t.size(), cap);
  const auto out = out_masks(t);
  return solve_layered<std::uint16_t>(FasStep{t.size(), out}, t.size());
}

SetResult exact_min_ds(const Tournament& t, std::size_t cap) {
  check_cap("exact_min_ds", t.size(), cap);
  const std::size_t n = t.size();
  const auto in = in_masks(t);
  const Mask all = (Mask{1} << n) - 1;
  const Layers layers = popcount_layers(n);
  SetResult r;
  for (std::size_t k = 1; k <= n; ++k) {
    const auto lo = static_cast<std::ptrdiff_t>(layers.begin[k]);
    const auto hi = static_cast<std::ptrdiff_t>(layers.begin[k + 1]);
    std::ptrdiff_t first = hi;
#pragma omp parallel for schedule(static) reduction(min : first)
    for (std::ptrdiff_t i = lo; i < hi; ++i)
      if (i < first && dominating_mask(in, all, layers.masks[static_cast<std::size_t>(i)])) first = i;
    if (first < hi) {
      r.value = k;
      r.witness = mask_to_set(n, layers.masks[static_cast<std::size_t>(first)]);
      r.explored = static_cast<std::uint64_t>(first - lo + 1) + layers.begin[k] - 1;
      return r;
    }
  }
  throw Error("exact_min_ds: no dominating set found");
}

// ---------------------------------------------------------------------------

namespace {

bool fvst_branch(const Tournament& t, VertexSet& alive, VertexSet& chosen, std::size_t budget) {
  const auto tri = find_triangle(t, alive);
  if (!tri) return true;
  if (budget == 0) return false;
  std::array<Vertex, 3> branch{tri->a, tri->b, tri->c};
  std::sort(branch.begin(), branch.end());
  for (Vertex v : branch) {
    alive.erase(v);
    chosen.insert(v);
    if (fvst_branch(t, alive, chosen, budget - 1)) return true;
    chosen.erase(v);
    alive.insert(v);
  }
  return false;
}

}  // namespace

std::optional<VertexSet> exact_fvst(const Tournament& t, std::size_t k) {
  VertexSet alive = VertexSet::full(t.size());
  VertexSet chosen(t.size());
  if (!fvst_branch(t, alive, chosen, k)) return std::nullopt;
  if (!is_feedback_vertex_set(t, chosen)) throw Error("exact_fvst: internal check failed");
  return chosen;
}

// ---------------------------------------------------------------------------

namespace {

struct SparseSearch {
  const Tournament& t;
  const std::vector<Mask>& out;
  std::size_t n;
  std::vector<Vertex> prefix;
  std::vector<Ordering> found;

  void run(Mask placed) {
    if (prefix.size() == n) {
      found.emplace_back(prefix);
      return;
    }
    const DegreewidthStep step{n, out};
    for (Vertex v = 0; v < n; ++v) {
      if ((placed >> v) & 1U) continue;
      if (step.cost(v, placed) > 1) continue;
      prefix.push_back(v);
      run(placed | (Mask{1} << v));
      prefix.pop_back();
    }
  }
};

}  // namespace

std::vector<Ordering> brute_sparse_orderings(const Tournament& t, std::size_t cap) {
  check_cap("brute_sparse_orderings", t.size(), cap);
  const auto out = out_masks(t);
  SparseSearch search{t, out, t.size(), {}, {}};
  search.run(0);
  return std::move(search.found);
}

CutwidthResult cutwidth_tournament(const Tournament& t) {
  std::vector<Vertex> perm(t.size());
  for (Vertex v = 0; v < t.size(); ++v) perm[v] = v;
  std::stable_sort(perm.begin(), perm.end(), [&](Vertex a, Vertex b) { return t.in_degree(a) < t.in_degree(b); });
  CutwidthResult r;
  r.ordering = Ordering(std::move(perm));
  r.value = backward_profile(t, r.ordering).max_cut;
  return r;
}

}  // namespace dwlab
