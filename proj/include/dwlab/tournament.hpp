#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dwlab/vertex_set.hpp"

namespace dwlab {

using Arc = std::pair<Vertex, Vertex>;  // (tail, head)

class TournamentBuilder;

/// Complete antisymmetric digraph stored as dense out-neighbour bit rows.
///
/// Instances are immutable; build them with `from_arcs`, `TournamentBuilder`
/// or one of the generators.
class Tournament {
 public:
  Tournament() = default;

  /// Throws InvalidInput on out-of-range ids, self-loops, duplicates,
  /// opposite pairs or undecided pairs.
  static Tournament from_arcs(std::size_t n, std::span<const Arc> arcs);

  std::size_t size() const noexcept { return n_; }

  bool has_arc(Vertex u, Vertex v) const noexcept {
    return ((rows_[u * stride_ + v / VertexSet::kWordBits] >> (v % VertexSet::kWordBits)) & 1U) != 0;
  }

  std::size_t out_degree(Vertex v) const noexcept { return out_degree_[v]; }
  std::size_t in_degree(Vertex v) const noexcept { return n_ - 1 - out_degree_[v]; }
  std::size_t min_in_degree() const noexcept;

  std::span<const VertexSet::Word> out_row(Vertex v) const noexcept {
    return {rows_.data() + v * stride_, stride_};
  }
  VertexSet out_neighbours(Vertex v) const;
  VertexSet in_neighbours(Vertex v) const;

  /// |N+(v) ∩ S|.
  std::size_t out_count_in(Vertex v, const VertexSet& s) const noexcept {
    return intersection_count(out_row(v), s.words());
  }
  /// |N-(v) ∩ S|.
  std::size_t in_count_in(Vertex v, const VertexSet& s) const noexcept {
    return s.count() - (s.contains(v) ? 1 : 0) - out_count_in(v, s);
  }

  /// Low 64 bits of the out row; only meaningful for n <= 64.
  std::uint64_t out_mask(Vertex v) const noexcept { return rows_[v * stride_]; }

  std::vector<Arc> arcs() const;

  friend bool operator==(const Tournament& a, const Tournament& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

 private:
  friend class TournamentBuilder;

  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<VertexSet::Word> rows_;
  std::vector<std::size_t> out_degree_;
};

/// Mutable adjacency used to assemble a tournament pair by pair.
class TournamentBuilder {
 public:
  explicit TournamentBuilder(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  /// Adds u -> v; rejects self-loops and pairs that are already decided.
  void add_arc(Vertex u, Vertex v);
  /// Sets u -> v, overwriting any previous orientation of {u, v}.
  void orient(Vertex u, Vertex v);
  bool decided(Vertex u, Vertex v) const;

  /// Throws InvalidInput naming the first undecided pair.
  Tournament build() const;

 private:
  void check_pair(Vertex u, Vertex v) const;

  std::size_t n_;
  std::size_t stride_;
  std::vector<VertexSet::Word> out_;
  std::vector<VertexSet::Word> decided_;
};

/// Permutation of [0, n) with its inverse; position -> vertex and vertex -> position.
class Ordering {
 public:
  Ordering() = default;
  /// Throws InvalidInput unless `perm` is a permutation of [0, perm.size()).
  explicit Ordering(std::vector<Vertex> perm);

  static Ordering identity(std::size_t n);

  std::size_t size() const noexcept { return perm_.size(); }
  Vertex operator[](std::size_t position) const noexcept { return perm_[position]; }
  std::size_t position(Vertex v) const noexcept { return pos_[v]; }
  bool before(Vertex u, Vertex v) const noexcept { return pos_[u] < pos_[v]; }

  std::span<const Vertex> vertices() const noexcept { return perm_; }
  Ordering reversed() const;

  friend bool operator==(const Ordering& a, const Ordering& b) { return a.perm_ == b.perm_; }

 private:
  std::vector<Vertex> perm_;
  std::vector<std::size_t> pos_;
};

struct BackwardProfile {
  std::vector<std::size_t> per_vertex;  // d_σ(v)
  std::size_t width = 0;                // dw_σ(T)
  std::size_t total_backward = 0;
  std::size_t max_cut = 0;  // widest prefix cut
};

/// Throws InvalidInput when σ and T differ in size.
BackwardProfile backward_profile(const Tournament& t, const Ordering& order);

/// Backward arcs (u, v) with v before u, listed by position of the tail then head.
std::vector<Arc> backward_arcs(const Tournament& t, const Ordering& order);

struct InducedTournament {
  Tournament tournament;
  std::vector<Vertex> original;              // new id -> old id
  std::vector<std::optional<Vertex>> remap;  // old id -> new id
};

/// Sub-tournament on X (new ids follow ascending old ids).
InducedTournament induced(const Tournament& t, std::span<const Vertex> x);
InducedTournament induced(const Tournament& t, const VertexSet& x);

enum class DominationKind { Dominates, QuasiDominates, Neither };

struct DominationRelation {
  DominationKind kind = DominationKind::Neither;
  // Set only for QuasiDominates: the single arc (b, a) entering X.
  Vertex b = 0;
  Vertex a = 0;

  friend bool operator==(const DominationRelation&, const DominationRelation&) = default;
};

/// Relation of T[X] to the rest of T; requires ∅ ⊂ X ⊂ V(T).
DominationRelation domination_relation(const Tournament& t, const VertexSet& x);
DominationRelation domination_relation(const Tournament& t, std::span<const Vertex> x);

/// Every x in `from` beats every y in `to`.
bool dominates(const Tournament& t, std::span<const Vertex> from, std::span<const Vertex> to);

/// Strongly connected components of T[F] in condensation order (each component
/// beats every later one). Vertices inside a component are listed in σ order.
std::vector<std::vector<Vertex>> scc_in_order(const Tournament& t, const Ordering& order, const VertexSet& f);

/// Out-neighbour convention: every v outside S has an out-neighbour in S.
bool is_dominating_set(const Tournament& t, const VertexSet& s);
bool is_dominating_set(const Tournament& t, std::span<const Vertex> s);

bool is_acyclic(const Tournament& t);
/// Topological order when T is acyclic.
std::optional<Ordering> topological_order(const Tournament& t);

struct Triangle {
  Vertex a, b, c;  // a -> b -> c -> a
};

/// Lexicographically least directed triangle by sorted vertex triple, within `alive`.
std::optional<Triangle> find_triangle(const Tournament& t, const VertexSet& alive);
std::optional<Triangle> find_triangle(const Tournament& t);

/// T - X acyclic.
bool is_feedback_vertex_set(const Tournament& t, const VertexSet& x);

}  // namespace dwlab
