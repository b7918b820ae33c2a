#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dwlab/error.hpp"
#include "dwlab/tournament.hpp"

namespace dwlab {

// ---- Balanced 3-SAT(4) -------------------------------------------------------

struct Literal {
  std::size_t var;  // 0-based
  bool positive;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

/// 3-CNF where each clause has three distinct variables and each variable
/// occurs twice positively and twice negatively.
struct Balanced3Sat4 {
  std::size_t n_vars = 0;
  std::vector<Clause> clauses;

  friend bool operator==(const Balanced3Sat4&, const Balanced3Sat4&) = default;
};

using Assignment = std::vector<bool>;

/// Throws InvalidInput on out-of-range variables, repeated variables in a
/// clause, or unbalanced occurrence counts. With `allow_unused`, variables
/// that occur nowhere are accepted.
void validate_balanced_3sat4(const Balanced3Sat4& f, bool allow_unused = false);

/// Two disjoint copies; the second uses variables n..2n-1.
Balanced3Sat4 duplicate_formula(const Balanced3Sat4& f);

/// Returns f unchanged when n is odd and m is even; otherwise duplicates (if m
/// is odd) and appends one unused variable (if n is then even).
Balanced3Sat4 normalize_parity(const Balanced3Sat4& f);

bool satisfies(const Balanced3Sat4& f, const Assignment& beta);

/// Least odd W > n^3 + m^3 with (W+1)/2 + m + n odd.
std::size_t reduction_weight(std::size_t n_vars, std::size_t n_clauses);

// ---- SAT -> degreewidth ------------------------------------------------------

enum class Block { A, B, C, D, X, Y, U, H };
inline constexpr std::size_t kBlockCount = 8;

std::string_view to_string(Block block);

struct BlockRange {
  Vertex first = 0;
  std::size_t size = 0;

  bool contains(Vertex v) const noexcept { return v >= first && v < first + size; }
};

struct SatReductionInstance {
  Balanced3Sat4 formula;
  Tournament tournament;
  std::size_t weight = 0;     // W
  std::size_t threshold = 0;  // W + 2m + 3n + 4
  std::array<BlockRange, kBlockCount> blocks{};
  std::vector<Block> block_of;
  std::vector<std::string> labels;  // a1.., b1.., c1.., d1.., v1/v'1, q1/q'1, u1_1/ubar1_1, h1/h2

  const BlockRange& range(Block b) const { return blocks[static_cast<std::size_t>(b)]; }

  Vertex v(std::size_t i) const { return range(Block::X).first + 2 * i; }
  Vertex v_prime(std::size_t i) const { return range(Block::X).first + 2 * i + 1; }
  Vertex q(std::size_t l) const { return range(Block::Y).first + 2 * l; }
  Vertex q_prime(std::size_t l) const { return range(Block::Y).first + 2 * l + 1; }
  /// u^p_i (bar = false) or ū^p_i (bar = true), p in {1, 2}.
  Vertex u(std::size_t i, std::size_t p, bool bar) const {
    return range(Block::U).first + 4 * i + (bar ? 2 : 0) + (p - 1);
  }
  Vertex h(std::size_t k) const { return range(Block::H).first + (k - 1); }
};

/// Requires a valid formula (unused variables allowed) with n odd and m even.
/// A, B, C, D are rotational tournaments whose natural order is ascending id;
/// X, Y, U, H are acyclic in ascending id order.
SatReductionInstance sat_to_degreewidth(const Balanced3Sat4& f);

/// Recomputes every pair's orientation from the block map and the formula and
/// lists each disagreement (empty when the instance is exactly the construction).
std::vector<std::string> audit_sat_instance(const SatReductionInstance& inst);

/// A < true-zone pairs < B < U < Y < C < false-zone pairs < D < H.
Ordering nice_ordering_from_assignment(const SatReductionInstance& inst, const Assignment& beta);

class NotNice : public Error {
 public:
  using Error::Error;
};

/// A nice ordering whose width reaches the threshold; `vertex` has backward
/// degree >= threshold (a clause vertex whenever one qualifies).
class ThresholdReached : public Error {
 public:
  ThresholdReached(const std::string& what, Vertex vertex, std::size_t degree)
      : Error(what), vertex_(vertex), degree_(degree) {}
  Vertex vertex() const noexcept { return vertex_; }
  std::size_t degree() const noexcept { return degree_; }

 private:
  Vertex vertex_;
  std::size_t degree_;
};

/// Throws NotNice or ThresholdReached; the returned assignment is checked to
/// satisfy the formula.
Assignment assignment_from_nice_ordering(const SatReductionInstance& inst, const Ordering& order);

// ---- cubic vertex cover -> FVST on a sparse tournament ---------------------

using Edge = std::pair<Vertex, Vertex>;

struct CubicGraph {
  std::size_t n = 0;
  std::vector<Edge> edges;  // normalized u < v, sorted
};

/// Normalizes and validates: simple, every vertex of degree 3.
CubicGraph make_cubic_graph(std::size_t n, std::vector<Edge> edges);
/// Sorted neighbour lists.
std::vector<std::array<Vertex, 3>> neighbours(const CubicGraph& g);
bool is_vertex_cover(const CubicGraph& g, const VertexSet& s);

enum class ArcTag { VertexBackward, EdgeBackward };

struct TaggedArc {
  Arc arc;  // (tail, head), tail after head in the sparse ordering
  ArcTag tag;
  std::size_t i;  // graph vertex (vertex arcs) or smaller endpoint (edge arcs)
  std::size_t j;  // larger endpoint for edge arcs, = i otherwise
};

struct FvstReductionInstance {
  CubicGraph graph;
  Tournament tournament;
  Ordering sparse_ordering;
  std::size_t offset = 0;  // |E(G)|
  std::vector<std::array<Vertex, 3>> adjacency;  // sorted neighbours of each graph vertex
  std::vector<std::array<Vertex, 8>> patterns;   // <h, u, u, u, t, x1, x2, x3>
  std::vector<TaggedArc> backward;

  Vertex h(std::size_t i) const { return patterns[i][0]; }
  Vertex t(std::size_t i) const { return patterns[i][4]; }
  Vertex x(std::size_t i, std::size_t r) const { return patterns[i][4 + r]; }
  /// u^j_i: the vertex of pattern i standing for its neighbour j.
  Vertex u(std::size_t i, std::size_t j) const;
};

FvstReductionInstance cubic_to_fvst(const CubicGraph& g);

/// Throws InvalidInput unless s covers every edge.
VertexSet vc_to_fvst_solution(const FvstReductionInstance& inst, const VertexSet& s);

/// Saturation of backward arc (tail, head): everything strictly between lies in X.
bool saturated(const FvstReductionInstance& inst, const Arc& arc, const VertexSet& x);

/// Exchange steps that turn an FVS into one of no larger size hitting every edge
/// arc exactly once and holding only endpoints of backward arcs.
VertexSet normalize_fvst_solution(const FvstReductionInstance& inst, const VertexSet& x);

/// Throws InvalidInput unless x is a feedback vertex set.
VertexSet fvst_solution_to_vc(const FvstReductionInstance& inst, const VertexSet& x);

}  // namespace dwlab
