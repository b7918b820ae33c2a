#include "dwlab/tournament.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dwlab/error.hpp"

namespace dwlab {
namespace {

std::string pair_str(Vertex u, Vertex v) { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }

void check_same_size(const Tournament& t, const Ordering& order) {
  if (order.size() != t.size())
    throw InvalidInput("ordering covers " + std::to_string(order.size()) + " vertices, tournament has " +
                       std::to_string(t.size()));
}

}  // namespace

// ---------------------------------------------------------------------------
// Tournament / builder

TournamentBuilder::TournamentBuilder(std::size_t n)
    : n_(n), stride_(VertexSet::word_count(n)), out_(n * stride_, 0), decided_(n * stride_, 0) {
  if (n == 0) throw InvalidInput("tournament needs at least one vertex");
}

void TournamentBuilder::check_pair(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) throw InvalidInput("arc " + pair_str(u, v) + " out of range for n=" + std::to_string(n_));
  if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
}

bool TournamentBuilder::decided(Vertex u, Vertex v) const {
  check_pair(u, v);
  return ((decided_[u * stride_ + v / 64] >> (v % 64)) & 1U) != 0;
}

void TournamentBuilder::add_arc(Vertex u, Vertex v) {
  check_pair(u, v);
  if (decided(u, v)) {
    const bool same = ((out_[u * stride_ + v / 64] >> (v % 64)) & 1U) != 0;
    throw InvalidInput(same ? "duplicate arc " + pair_str(u, v)
                            : "both " + pair_str(u, v) + " and " + pair_str(v, u) + " given");
  }
  orient(u, v);
}

void TournamentBuilder::orient(Vertex u, Vertex v) {
  check_pair(u, v);
  const VertexSet::Word bu = VertexSet::Word{1} << (u % 64);
  const VertexSet::Word bv = VertexSet::Word{1} << (v % 64);
  out_[u * stride_ + v / 64] |= bv;
  out_[v * stride_ + u / 64] &= ~bu;
  decided_[u * stride_ + v / 64] |= bv;
  decided_[v * stride_ + u / 64] |= bu;
}

Tournament TournamentBuilder::build() const {
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (((decided_[u * stride_ + v / 64] >> (v % 64)) & 1U) == 0)
        throw InvalidInput("pair {" + std::to_string(u) + "," + std::to_string(v) + "} undecided");
  Tournament t;
  t.n_ = n_;
  t.stride_ = stride_;
  t.rows_ = out_;
  t.out_degree_.resize(n_);
  for (Vertex v = 0; v < n_; ++v) t.out_degree_[v] = intersection_count(t.out_row(v), t.out_row(v));
  return t;
}

Tournament Tournament::from_arcs(std::size_t n, std::span<const Arc> arcs) {
  TournamentBuilder b(n);
  for (const auto& [u, v] : arcs) b.add_arc(u, v);
  return b.build();
}

std::size_t Tournament::min_in_degree() const noexcept {
  std::size_t best = n_;
  for (Vertex v = 0; v < n_; ++v) best = std::min(best, in_degree(v));
  return best;
}

VertexSet Tournament::out_neighbours(Vertex v) const {
  VertexSet s(n_);
  for (Vertex u = 0; u < n_; ++u)
    if (has_arc(v, u)) s.insert(u);
  return s;
}

VertexSet Tournament::in_neighbours(Vertex v) const {
  VertexSet s(n_);
  for (Vertex u = 0; u < n_; ++u)
    if (u != v && !has_arc(v, u)) s.insert(u);
  return s;
}

std::vector<Arc> Tournament::arcs() const {
  std::vector<Arc> out;
  out.reserve(n_ * (n_ - 1) / 2);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = 0; v < n_; ++v)
      if (has_arc(u, v)) out.emplace_back(u, v);
  return out;
}

// ---------------------------------------------------------------------------
// Ordering

Ordering::Ordering(std::vector<Vertex> perm) : perm_(std::move(perm)), pos_(perm_.size(), perm_.size()) {
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    const Vertex v = perm_[i];
    if (v >= perm_.size()) throw InvalidInput("ordering entry " + std::to_string(v) + " out of range");
    if (pos_[v] != perm_.size()) throw InvalidInput("ordering repeats vertex " + std::to_string(v));
    pos_[v] = i;
  }
}

Ordering Ordering::identity(std::size_t n) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), Vertex{0});
  return Ordering(std::move(p));
}

Ordering Ordering::reversed() const { return Ordering(std::vector<Vertex>(perm_.rbegin(), perm_.rend())); }

// ---------------------------------------------------------------------------
// Backward arcs

BackwardProfile backward_profile(const Tournament& t, const Ordering& order) {
  check_same_size(t, order);
  const std::size_t n = t.size();
  BackwardProfile p;
  p.per_vertex.assign(n, 0);
  std::vector<long> cut_delta(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex head = order[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vertex tail = order[j];
      if (!t.has_arc(tail, head)) continue;
      ++p.per_vertex[head];
      ++p.per_vertex[tail];
      ++p.total_backward;
      // crosses the boundaries after positions i .. j-1
      ++cut_delta[i];
      --cut_delta[j];
    }
  }
  long running = 0;
  for (std::size_t k = 0; k < n; ++k) {
    running += cut_delta[k];
    p.max_cut = std::max(p.max_cut, static_cast<std::size_t>(running));
  }
  for (std::size_t d : p.per_vertex) p.width = std::max(p.width, d);
  return p;
}

std::vector<Arc> backward_arcs(const Tournament& t, const Ordering& order) {
  check_same_size(t, order);
  std::vector<Arc> out;
  for (std::size_t j = 0; j < order.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (t.has_arc(order[j], order[i])) out.emplace_back(order[j], order[i]);
  return out;
}

// ---------------------------------------------------------------------------
// Induced sub-tournaments

InducedTournament induced(const Tournament& t, const VertexSet& x) {
  if (x.universe() != t.size()) throw InvalidInput("vertex set universe does not match tournament");
  if (x.empty()) throw InvalidInput("induced sub-tournament needs a nonempty vertex set");
  InducedTournament r;
  r.original = x.to_vector();
  r.remap.assign(t.size(), std::nullopt);
  for (std::size_t i = 0; i < r.original.size(); ++i) r.remap[r.original[i]] = i;
  TournamentBuilder b(r.original.size());
  for (std::size_t i = 0; i < r.original.size(); ++i)
    for (std::size_t j = i + 1; j < r.original.size(); ++j) {
      if (t.has_arc(r.original[i], r.original[j]))
        b.orient(i, j);
      else
        b.orient(j, i);
    }
  r.tournament = b.build();
  return r;
}

InducedTournament induced(const Tournament& t, std::span<const Vertex> x) {
  return induced(t, VertexSet::of(t.size(), x));
}

// ---------------------------------------------------------------------------
// Domination

DominationRelation domination_relation(const Tournament& t, const VertexSet& x) {
  const std::size_t k = x.count();
  if (k == 0 || k == t.size()) throw InvalidInput("domination relation needs a proper nonempty subset");
  const VertexSet rest = VertexSet::full(t.size()) - x;

  std::size_t entering = 0;
  DominationRelation r;
  x.for_each([&](Vertex a) {
    const std::size_t in_from_rest = t.in_count_in(a, rest);
    if (in_from_rest == 0) return;
    entering += in_from_rest;
    rest.for_each([&](Vertex b) {
      if (t.has_arc(b, a)) {
        r.b = b;
        r.a = a;
      }
    });
  });
  if (entering == 0) return {DominationKind::Dominates, 0, 0};
  if (entering == 1 && t.in_degree(r.b) >= k + 1 && t.out_count_in(r.a, x) > 0) {
    r.kind = DominationKind::QuasiDominates;
    return r;
  }
  return {};
}

DominationRelation domination_relation(const Tournament& t, std::span<const Vertex> x) {
  return domination_relation(t, VertexSet::of(t.size(), x));
}

bool dominates(const Tournament& t, std::span<const Vertex> from, std::span<const Vertex> to) {
  for (Vertex x : from)
    for (Vertex y : to)
      if (!t.has_arc(x, y)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Strong components

std::vector<std::vector<Vertex>> scc_in_order(const Tournament& t, const Ordering& order, const VertexSet& f) {
  check_same_size(t, order);
  // Landau: sorted by in-degree inside T[F], a prefix of size k is closed
  // under in-arcs iff its in-degree sum is k(k-1)/2.
  std::vector<Vertex> members = f.to_vector();
  std::vector<std::size_t> indeg(t.size(), 0);
  for (Vertex v : members) indeg[v] = t.in_count_in(v, f);
  std::sort(members.begin(), members.end(), [&](Vertex a, Vertex b) {
    if (indeg[a] != indeg[b]) return indeg[a] < indeg[b];
    return order.position(a) < order.position(b);
  });

  std::vector<std::vector<Vertex>> comps;
  std::vector<Vertex> current;
  std::size_t sum = 0;
  for (std::size_t k = 0; k < members.size(); ++k) {
    current.push_back(members[k]);
    sum += indeg[members[k]];
    const std::size_t size = k + 1;
    if (sum == size * (size - 1) / 2) {
      std::sort(current.begin(), current.end(),
                [&](Vertex a, Vertex b) { return order.position(a) < order.position(b); });
      comps.push_back(std::move(current));
      current.clear();
    }
  }
  return comps;
}

// ---------------------------------------------------------------------------
// Domination sets, acyclicity, triangles

bool is_dominating_set(const Tournament& t, const VertexSet& s) {
  for (Vertex v = 0; v < t.size(); ++v)
    if (!s.contains(v) && t.out_count_in(v, s) == 0) return false;
  return true;
}

bool is_dominating_set(const Tournament& t, std::span<const Vertex> s) {
  return is_dominating_set(t, VertexSet::of(t.size(), s));
}

std::optional<Ordering> topological_order(const Tournament& t) {
  std::vector<Vertex> by_indeg(t.size(), t.size());
  for (Vertex v = 0; v < t.size(); ++v) {
    const std::size_t d = t.in_degree(v);
    if (by_indeg[d] != t.size()) return std::nullopt;
    by_indeg[d] = v;
  }
  return Ordering(std::move(by_indeg));
}

bool is_acyclic(const Tournament& t) { return topological_order(t).has_value(); }

std::optional<Triangle> find_triangle(const Tournament& t, const VertexSet& alive) {
  const std::size_t n = t.size();
  const std::size_t stride = VertexSet::word_count(n);
  std::vector<VertexSet::Word> cand(stride);
  for (Vertex a = 0; a < n; ++a) {
    if (!alive.contains(a)) continue;
    const auto ra = t.out_row(a);
    for (Vertex b = a + 1; b < n; ++b) {
      if (!alive.contains(b)) continue;
      const auto rb = t.out_row(b);
      const bool ab = t.has_arc(a, b);
      // a->b: need b->c->a ; b->a: need a->c->b
      for (std::size_t w = 0; w < stride; ++w) {
        VertexSet::Word m = ab ? (rb[w] & ~ra[w]) : (ra[w] & ~rb[w]);
        m &= alive.words()[w];
        cand[w] = m;
      }
      // restrict to c > b
      const std::size_t bw = (b + 1) / 64;
      for (std::size_t w = 0; w < bw && w < stride; ++w) cand[w] = 0;
      if (bw < stride && (b + 1) % 64 != 0) cand[bw] &= ~VertexSet::Word{0} << ((b + 1) % 64);
      for (std::size_t w = bw; w < stride; ++w) {
        if (cand[w] == 0) continue;
        const Vertex c = w * 64 + static_cast<std::size_t>(std::countr_zero(cand[w]));
        if (ab) return Triangle{a, b, c};
        return Triangle{a, c, b};
      }
    }
  }
  return std::nullopt;
}

std::optional<Triangle> find_triangle(const Tournament& t) { return find_triangle(t, VertexSet::full(t.size())); }

bool is_feedback_vertex_set(const Tournament& t, const VertexSet& x) {
  const VertexSet alive = VertexSet::full(t.size()) - x;
  std::vector<bool> seen(t.size(), false);
  bool ok = true;
  alive.for_each([&](Vertex v) {
    const std::size_t d = t.in_count_in(v, alive);
    if (seen[d]) ok = false;
    seen[d] = true;
  });
  return ok;
}

}  // namespace dwlab
