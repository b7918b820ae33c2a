#include "dwlab/sparse.hpp"

#include <algorithm>
#include <string>

#include "dwlab/error.hpp"

namespace dwlab {

std::string_view to_string(UOrderingKind kind) {
  switch (kind) {
    case UOrderingKind::Pi: return "Pi";
    case UOrderingKind::Pi_1_n: return "Pi_1_n";
    case UOrderingKind::Pi_1: return "Pi_1";
    case UOrderingKind::Pi_n: return "Pi_n";
    case UOrderingKind::Pi_2_of_U3: return "Pi_2_of_U3";
    case UOrderingKind::PiPrime_of_U4: return "PiPrime_of_U4";
  }
  return "?";
}

std::string_view to_string(Closure closure) {
  switch (closure) {
    case Closure::Dominates: return "dominates";
    case Closure::QuasiDominates: return "quasi_dominates";
    case Closure::Pendant: return "pendant";
  }
  return "?";
}

std::string_view to_string(PatternKind kind) {
  return kind == PatternKind::Pi_U2k ? "Pi_U2k" : "PiPrime_U4";
}

// ---------------------------------------------------------------------------
// Canonical orderings of U_n

namespace {

// P(k) = <v_{k+1}, v_k>, written with 0-based labels.
void push_p(std::vector<Vertex>& out, std::size_t k) {
  out.push_back(k);
  out.push_back(k - 1);
}

void require(bool ok, UOrderingKind kind, std::size_t n) {
  if (!ok)
    throw InvalidInput(std::string(to_string(kind)) + " is not defined for U_" + std::to_string(n));
}

}  // namespace

std::vector<Vertex> canonical_u_sequence(UOrderingKind kind, std::size_t n) {
  std::vector<Vertex> out;
  out.reserve(n);
  switch (kind) {
    case UOrderingKind::Pi:
      require(n >= 2 && n % 2 == 0, kind, n);
      out.push_back(0);
      for (std::size_t k = 2; k + 2 <= n; k += 2) push_p(out, k);
      out.push_back(n - 1);
      break;
    case UOrderingKind::Pi_1_n:
      // The trailing block is P(n-1) = <v_n, v_{n-1}>.
      require(n >= 2 && n % 2 == 0, kind, n);
      for (std::size_t k = 1; k < n; k += 2) push_p(out, k);
      break;
    case UOrderingKind::Pi_1:
      require(n % 2 == 1, kind, n);
      for (std::size_t k = 1; k + 2 <= n; k += 2) push_p(out, k);
      out.push_back(n - 1);
      break;
    case UOrderingKind::Pi_n:
      require(n % 2 == 1, kind, n);
      out.push_back(0);
      for (std::size_t k = 2; k < n; k += 2) push_p(out, k);
      break;
    case UOrderingKind::Pi_2_of_U3:
      require(n == 3, kind, n);
      out = {2, 1, 0};
      break;
    case UOrderingKind::PiPrime_of_U4:
      require(n == 4, kind, n);
      out = {1, 3, 0, 2};
      break;
  }
  return out;
}

Ordering canonical_u_ordering(UOrderingKind kind, std::size_t n) { return Ordering(canonical_u_sequence(kind, n)); }

std::vector<Vertex> free_labels(UOrderingKind kind, std::size_t n) {
  canonical_u_sequence(kind, n);
  switch (kind) {
    case UOrderingKind::Pi:
    case UOrderingKind::PiPrime_of_U4: return {};
    case UOrderingKind::Pi_1_n: return {0, n - 1};
    case UOrderingKind::Pi_1: return {0};
    case UOrderingKind::Pi_n: return {n - 1};
    case UOrderingKind::Pi_2_of_U3: return {1};
  }
  return {};
}

bool is_uk_m_sparse(std::size_t k, std::span<const Vertex> m) {
  bool first = false;
  bool last = false;
  bool inner = false;
  std::vector<Vertex> distinct(m.begin(), m.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (Vertex v : distinct) {
    if (v >= k) throw InvalidInput("label " + std::to_string(v) + " is not a vertex of U_" + std::to_string(k));
    if (v == 0)
      first = true;
    else if (v == k - 1)
      last = true;
    else
      inner = true;
  }
  if (k <= 2) return true;
  if (k == 3) return distinct.size() <= 1;
  if (k % 2 == 0) return !inner;
  return !inner && !(first && last);
}

namespace {

// Canonical ordering of U_k leaving the labels in `m` free; m must pass is_uk_m_sparse.
UOrderingKind choose_block_ordering(std::size_t k, std::span<const Vertex> m) {
  const auto has = [&](Vertex label) { return std::find(m.begin(), m.end(), label) != m.end(); };
  if (k == 1) return UOrderingKind::Pi_1;
  if (k % 2 == 0) return UOrderingKind::Pi_1_n;
  if (k == 3 && has(1)) return UOrderingKind::Pi_2_of_U3;
  return has(k - 1) ? UOrderingKind::Pi_n : UOrderingKind::Pi_1;
}

// ---------------------------------------------------------------------------
// Shrinking sub-tournament with maintained in-degrees

class AliveView {
 public:
  explicit AliveView(const Tournament& t) : t_(t), alive_(VertexSet::full(t.size())), indeg_(t.size()) {
    for (Vertex v = 0; v < t.size(); ++v) indeg_[v] = t.in_degree(v);
  }

  const VertexSet& alive() const { return alive_; }
  std::size_t indeg(Vertex v) const { return indeg_[v]; }

  void remove(Vertex x) {
    alive_.erase(x);
    const auto row = t_.out_row(x);
    const auto live = alive_.words();
    for (std::size_t w = 0; w < row.size(); ++w) {
      VertexSet::Word bits = row[w] & live[w];
      while (bits != 0) {
        --indeg_[w * VertexSet::kWordBits + static_cast<std::size_t>(std::countr_zero(bits))];
        bits &= bits - 1;
      }
    }
  }

  /// In-neighbours of v among alive vertices outside `x`.
  VertexSet in_neighbours_outside(Vertex v, const VertexSet& x) const {
    VertexSet out(t_.size());
    const auto row = t_.out_row(v);
    const auto live = alive_.words();
    const auto skip = x.words();
    for (std::size_t w = 0; w < row.size(); ++w) {
      VertexSet::Word bits = live[w] & ~skip[w] & ~row[w];
      while (bits != 0) {
        const Vertex u = w * VertexSet::kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
        if (u != v) out.insert(u);
        bits &= bits - 1;
      }
    }
    return out;
  }

  /// Algorithm "getUsubtournament" on the alive sub-tournament.
  UChain extend(std::vector<Vertex> chain) const {
    VertexSet members = VertexSet::of(t_.size(), chain);
    while (true) {
      const Vertex last = chain.back();
      const VertexSet outside = in_neighbours_outside(last, members);
      if (outside.empty()) {
        if (members == alive_) return {std::move(chain), Closure::Dominates, 0, 0};
        throw Error("U-chain head " + std::to_string(last) + " has no in-neighbour outside the chain");
      }
      if (outside.count() != 1)
        throw NotSparse("U-chain head " + std::to_string(last) + " has " + std::to_string(outside.count()) +
                        " in-neighbours outside the chain");
      const Vertex w = *outside.next();
      if (indeg_[w] == indeg_[last]) {
        chain.push_back(w);
        return {std::move(chain), Closure::Dominates, 0, 0};
      }
      if (indeg_[w] == indeg_[last] + 1) {
        chain.push_back(w);
        members.insert(w);
        continue;
      }
      if (indeg_[w] < indeg_[last]) throw Error("U-chain invariant violated at vertex " + std::to_string(w));
      return {std::move(chain), Closure::QuasiDominates, w, last};
    }
  }

  void check_u_property(std::span<const Vertex> chain) const {
    if (chain.size() < 2) throw InvalidInput("U-chain seed needs at least two vertices");
    for (std::size_t i = 0; i < chain.size(); ++i) {
      const Vertex v = chain[i];
      if (!alive_.contains(v)) throw InvalidInput("U-chain vertex " + std::to_string(v) + " out of range");
      const std::size_t want = i == 0 ? 1 : i;
      if (indeg_[v] != want)
        throw InvalidInput("U-chain vertex " + std::to_string(v) + " has in-degree " + std::to_string(indeg_[v]) +
                           ", expected " + std::to_string(want));
      if (i > 0 && !t_.has_arc(v, chain[i - 1]))
        throw InvalidInput("U-chain lacks arc (" + std::to_string(v) + "," + std::to_string(chain[i - 1]) + ")");
    }
  }

 private:
  const Tournament& t_;
  VertexSet alive_;
  std::vector<std::size_t> indeg_;
};

SparseBlock make_block(UChain chain, std::span<const Vertex> m_labels) {
  SparseBlock block;
  block.kind = choose_block_ordering(chain.vertices.size(), m_labels);
  for (Vertex label : canonical_u_sequence(block.kind, chain.vertices.size()))
    block.ordering.push_back(chain.vertices[label]);
  block.chain = std::move(chain);
  return block;
}

std::vector<Vertex> labels_in(const std::vector<Vertex>& chain, const VertexSet& m) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < chain.size(); ++i)
    if (m.contains(chain[i])) out.push_back(i);
  return out;
}

}  // namespace

UChain get_u_subtournament(const Tournament& t, std::vector<Vertex> seed) {
  const AliveView view(t);
  view.check_u_property(seed);
  return view.extend(std::move(seed));
}

std::optional<SparseCertificate> is_m_sparse(const Tournament& t, const VertexSet& m_in) {
  if (m_in.universe() != t.size()) throw InvalidInput("vertex set universe does not match tournament");
  AliveView view(t);
  VertexSet m = m_in;
  std::vector<SparseBlock> blocks;

  const auto single = [&](Vertex v, Closure closure, Vertex b) {
    const bool pendant = closure == Closure::Pendant;
    blocks.push_back(make_block({{v}, closure, pendant ? b : 0, pendant ? v : 0}, {}));
  };

  while (true) {
    const std::size_t remaining = view.alive().count();
    if (remaining == 0) break;
    if (remaining == 1) {
      single(*view.alive().next(), Closure::Dominates, 0);
      break;
    }
    std::optional<Vertex> source;
    std::vector<Vertex> ones;
    std::size_t min_indeg = t.size();
    view.alive().for_each([&](Vertex v) {
      const std::size_t d = view.indeg(v);
      min_indeg = std::min(min_indeg, d);
      if (d == 0 && !source) source = v;
      if (d == 1) ones.push_back(v);
    });
    if (min_indeg >= 2) return std::nullopt;

    if (source) {
      single(*source, Closure::Dominates, 0);
      m.erase(*source);
      view.remove(*source);
      continue;
    }

    if (ones.size() == 1) {
      const Vertex v = ones.front();
      const VertexSet in = view.in_neighbours_outside(v, VertexSet(t.size()));
      const Vertex w = *in.next();
      // (w, v) is backward in every sparse ordering, so neither end can be free.
      if (m.contains(v) || m.contains(w)) return std::nullopt;
      single(v, Closure::Pendant, w);
      m.insert(w);
      m.erase(v);
      view.remove(v);
      continue;
    }

    // Two in-degree-1 vertices with (w, v) in A seed the chain (v, w).
    Vertex v = ones[0];
    Vertex w = ones[1];
    if (t.has_arc(v, w)) std::swap(v, w);
    UChain chain = view.extend({v, w});
    const VertexSet x = VertexSet::of(t.size(), chain.vertices);

    VertexSet constrained = m;
    if (chain.closure == Closure::QuasiDominates) {
      // Likewise (b, a) is always backward.
      if (m.contains(chain.a) || m.contains(chain.b)) return std::nullopt;
      constrained.insert(chain.a);
    }
    const std::vector<Vertex> m_labels = labels_in(chain.vertices, constrained);
    if (!is_uk_m_sparse(chain.vertices.size(), m_labels)) return std::nullopt;

    if (chain.closure == Closure::QuasiDominates) m.insert(chain.b);
    m -= x;
    for (Vertex u : chain.vertices) view.remove(u);
    blocks.push_back(make_block(std::move(chain), m_labels));
  }

  std::vector<Vertex> perm;
  perm.reserve(t.size());
  for (const SparseBlock& b : blocks) perm.insert(perm.end(), b.ordering.begin(), b.ordering.end());
  SparseCertificate cert{Ordering(std::move(perm)), std::move(blocks)};

  const BackwardProfile profile = backward_profile(t, cert.ordering);
  bool ok = profile.width <= 1;
  m_in.for_each([&](Vertex v) { ok = ok && profile.per_vertex[v] == 0; });
  if (!ok) throw Error("is_m_sparse: certificate failed its own check");
  return cert;
}

std::optional<SparseCertificate> is_sparse(const Tournament& t) { return is_m_sparse(t, VertexSet(t.size())); }

// ---------------------------------------------------------------------------
// Forbidden patterns

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// partner[p] = position joined to p by its backward arc.
std::vector<std::size_t> backward_partners(const Tournament& t, const Ordering& order) {
  const std::size_t n = order.size();
  if (order.size() != t.size()) throw InvalidInput("ordering and tournament differ in size");
  std::vector<std::size_t> partner(n, kNone);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (t.has_arc(order[j], order[i])) {
        if (partner[i] != kNone || partner[j] != kNone) throw NotSparse("ordering has width greater than 1");
        partner[i] = j;
        partner[j] = i;
      }
  return partner;
}

std::optional<ForbiddenPattern> pattern_at(const std::vector<std::size_t>& partner, std::size_t s) {
  const std::size_t n = partner.size();
  const std::size_t p = partner[s];
  if (p == kNone || p < s) return std::nullopt;
  if (p == s + 1) return ForbiddenPattern{s, 2, PatternKind::Pi_U2k};
  if (p == s + 3 && partner[s + 1] == s + 2) return ForbiddenPattern{s, 4, PatternKind::PiPrime_U4};
  if (p != s + 2) return std::nullopt;
  // Span-4 arcs (head h, tail h+3) until a span-3 arc closes the pattern.
  for (std::size_t h = s + 1; h + 2 < n; h += 2) {
    if (partner[h] == h + 2) return ForbiddenPattern{s, h + 3 - s, PatternKind::Pi_U2k};
    if (partner[h] != h + 3) return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

std::optional<ForbiddenPattern> find_forbidden_pattern(const Tournament& t, const Ordering& order) {
  const std::vector<std::size_t> partner = backward_partners(t, order);
  for (std::size_t s = 0; s < partner.size(); ++s)
    if (auto p = pattern_at(partner, s)) return p;
  return std::nullopt;
}

Ordering eliminate_forbidden_patterns(const Tournament& t, const Ordering& order) {
  const std::vector<std::size_t> partner = backward_partners(t, order);
  std::vector<Vertex> perm(order.vertices().begin(), order.vertices().end());
  std::size_t s = 0;
  while (s < perm.size()) {
    const auto p = pattern_at(partner, s);
    if (!p) {
      ++s;
      continue;
    }
    if (p->kind == PatternKind::PiPrime_U4) {
      std::swap(perm[s + 1], perm[s + 2]);
    } else {
      // Window holds Pi(U_2k): label v_1 at s, v_i (odd i >= 3) at s+i-2,
      // v_i (even i < 2k) at s+i, v_2k at the end.
      const std::size_t len = p->length;
      std::vector<Vertex> label(len);
      label[0] = perm[s];
      label[len - 1] = perm[s + len - 1];
      for (std::size_t i = 3; i < len; i += 2) label[i - 1] = perm[s + i - 2];
      for (std::size_t i = 2; i < len; i += 2) label[i - 1] = perm[s + i];
      for (std::size_t i = 0; i < len; i += 2) {
        perm[s + i] = label[i + 1];
        perm[s + i + 1] = label[i];
      }
    }
    s += p->length;
  }
  Ordering result(std::move(perm));
  if (find_forbidden_pattern(t, result)) throw Error("eliminate_forbidden_patterns: pattern survived");
  return result;
}

FasResult fast_sparse(const Tournament& t) {
  const auto cert = is_sparse(t);
  if (!cert) throw NotSparse("tournament is not sparse");
  FasResult r;
  r.ordering = eliminate_forbidden_patterns(t, cert->ordering);
  r.arcs = backward_arcs(t, r.ordering);

  TournamentBuilder reversed(t.size());
  for (const Arc& a : t.arcs()) reversed.orient(a.first, a.second);
  for (const Arc& a : r.arcs) reversed.orient(a.second, a.first);
  if (!is_acyclic(reversed.build())) throw Error("fast_sparse: reversing the arc set left a cycle");
  return r;
}

}  // namespace dwlab
