#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "dwlab/tournament.hpp"

namespace dwlab {

struct AcyclicSpec {
  std::size_t n;
};
/// Order 2k+1; vertex i beats i+1, ..., i+k (mod 2k+1).
struct RotationalSpec {
  std::size_t k;
};
struct USpec {
  std::size_t n;
};
struct RandomSpec {
  std::size_t n;
  std::uint64_t seed;
};

using GeneratorSpec = std::variant<AcyclicSpec, RotationalSpec, USpec, RandomSpec>;

struct Generated {
  Tournament tournament;
  std::vector<std::string> labels;  // "v1".. for U_n, plain ids otherwise
  Ordering natural;                 // topological / rotational / identity
};

Tournament acyclic(std::size_t n);
Tournament rotational(std::size_t k);
/// Vertex id i is v_{i+1}.
Tournament u_tournament(std::size_t n);
/// Pairs i < j in lexicographic order, one xorshift64* draw each: top bit set -> i->j.
Tournament random_tournament(std::size_t n, std::uint64_t seed);

Generated generate(const GeneratorSpec& spec);

/// Cross-block pair to reverse: `tail` lies in a later block, `head` in an earlier one.
struct Override {
  Vertex tail;
  Vertex head;
};

/// Disjoint union of `blocks` (ids shifted by the sizes of earlier blocks);
/// earlier blocks beat later ones except where an override reverses the pair.
Tournament dominate_join(std::span<const Tournament> blocks, std::span<const Override> overrides = {});

}  // namespace dwlab
