#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "dwlab/tournament.hpp"

namespace dwlab {

/// The sparse orderings of U_n. Labels are 0-based: vertex i is v_{i+1}.
enum class UOrderingKind { Pi, Pi_1_n, Pi_1, Pi_n, Pi_2_of_U3, PiPrime_of_U4 };

std::string_view to_string(UOrderingKind kind);

/// Vertex sequence of the ordering; throws InvalidInput on a parity or size mismatch.
std::vector<Vertex> canonical_u_sequence(UOrderingKind kind, std::size_t n);
Ordering canonical_u_ordering(UOrderingKind kind, std::size_t n);
/// Labels with no incident backward arc in the ordering.
std::vector<Vertex> free_labels(UOrderingKind kind, std::size_t n);

/// Whether U_k has a sparse ordering leaving every label of `m` free.
bool is_uk_m_sparse(std::size_t k, std::span<const Vertex> m);

enum class Closure {
  Dominates,       // no arc enters the block from later vertices
  QuasiDominates,  // exactly the arc (b, a) enters
  Pendant,         // single vertex a whose only in-neighbour is b
};

std::string_view to_string(Closure closure);

/// v_1 .. v_k in U-property order, plus how the chain relates to the rest.
struct UChain {
  std::vector<Vertex> vertices;
  Closure closure = Closure::Dominates;
  Vertex b = 0;
  Vertex a = 0;
};

/// Extends a seed list with the U-property until it dominates or
/// quasi-dominates T. Throws InvalidInput when the seed lacks the property.
UChain get_u_subtournament(const Tournament& t, std::vector<Vertex> seed);

struct SparseBlock {
  UChain chain;
  UOrderingKind kind = UOrderingKind::Pi_1;
  std::vector<Vertex> ordering;  // chain vertices in the chosen canonical order
};

struct SparseCertificate {
  Ordering ordering;
  std::vector<SparseBlock> blocks;
};

/// A sparse ordering in which every vertex of M is free, built by the
/// in-degree case analysis; nothing when no such ordering exists.
std::optional<SparseCertificate> is_m_sparse(const Tournament& t, const VertexSet& m);
std::optional<SparseCertificate> is_sparse(const Tournament& t);

enum class PatternKind { Pi_U2k, PiPrime_U4 };

std::string_view to_string(PatternKind kind);

struct ForbiddenPattern {
  std::size_t start = 0;
  std::size_t length = 0;
  PatternKind kind = PatternKind::Pi_U2k;

  friend bool operator==(const ForbiddenPattern&, const ForbiddenPattern&) = default;
};

/// Leftmost contiguous Pi(U_2k) (k >= 1) or Pi'(U_4). Throws NotSparse
/// when the ordering has width > 1.
std::optional<ForbiddenPattern> find_forbidden_pattern(const Tournament& t, const Ordering& order);

/// Rewrites every pattern to Pi_{1,2k}(U_2k) (resp. Pi_{1,4}(U_4)) in one left-to-right pass.
Ordering eliminate_forbidden_patterns(const Tournament& t, const Ordering& order);

struct FasResult {
  std::vector<Arc> arcs;
  Ordering ordering;
};

/// Minimum feedback arc set of a sparse tournament. Throws NotSparse otherwise.
FasResult fast_sparse(const Tournament& t);

}  // namespace dwlab
