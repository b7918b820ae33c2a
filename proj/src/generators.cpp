#include "dwlab/generators.hpp"

#include <string>
#include <type_traits>
#include <variant>

#include "dwlab/error.hpp"
#include "dwlab/random.hpp"

namespace dwlab {

Tournament acyclic(std::size_t n) {
  TournamentBuilder b(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) b.orient(i, j);
  return b.build();
}

Tournament rotational(std::size_t k) {
  if (k == 0) throw InvalidInput("rotational tournament needs k >= 1");
  const std::size_t n = 2 * k + 1;
  TournamentBuilder b(n);
  for (Vertex i = 0; i < n; ++i)
    for (std::size_t d = 1; d <= k; ++d) b.orient(i, (i + d) % n);
  return b.build();
}

Tournament u_tournament(std::size_t n) {
  if (n < 2) throw InvalidInput("U_n needs n >= 2");
  TournamentBuilder b(n);
  for (Vertex i = 0; i + 1 < n; ++i) {
    b.orient(i + 1, i);
    for (Vertex j = i + 2; j < n; ++j) b.orient(i, j);
  }
  return b.build();
}

Tournament random_tournament(std::size_t n, std::uint64_t seed) {
  Xorshift64Star rng(seed);
  TournamentBuilder b(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) {
      if (rng.coin())
        b.orient(i, j);
      else
        b.orient(j, i);
    }
  return b.build();
}

namespace {

std::vector<std::string> plain_labels(std::size_t n) {
  std::vector<std::string> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = std::to_string(i);
  return out;
}

std::vector<std::string> u_labels(std::size_t n) {
  std::vector<std::string> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = "v" + std::to_string(i + 1);
  return out;
}

}  // namespace

Generated generate(const GeneratorSpec& spec) {
  return std::visit(
      [](const auto& s) -> Generated {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, AcyclicSpec>) {
          return {acyclic(s.n), plain_labels(s.n), Ordering::identity(s.n)};
        } else if constexpr (std::is_same_v<S, RotationalSpec>) {
          Tournament t = rotational(s.k);
          return {t, plain_labels(t.size()), Ordering::identity(t.size())};
        } else if constexpr (std::is_same_v<S, USpec>) {
          return {u_tournament(s.n), u_labels(s.n), Ordering::identity(s.n)};
        } else {
          return {random_tournament(s.n, s.seed), plain_labels(s.n), Ordering::identity(s.n)};
        }
      },
      spec);
}

Tournament dominate_join(std::span<const Tournament> blocks, std::span<const Override> overrides) {
  if (blocks.empty()) throw InvalidInput("dominate_join needs at least one block");
  std::vector<std::size_t> block_of;
  std::vector<Vertex> offset;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    offset.push_back(block_of.size());
    block_of.insert(block_of.end(), blocks[b].size(), b);
  }
  const std::size_t n = block_of.size();
  TournamentBuilder builder(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const std::size_t bu = block_of[u];
      const std::size_t bv = block_of[v];
      if (bu != bv) {
        builder.orient(u, v);
      } else if (blocks[bu].has_arc(u - offset[bu], v - offset[bu])) {
        builder.orient(u, v);
      } else {
        builder.orient(v, u);
      }
    }
  for (const Override& o : overrides) {
    if (o.tail >= n || o.head >= n)
      throw InvalidInput("override (" + std::to_string(o.tail) + "," + std::to_string(o.head) + ") out of range");
    if (block_of[o.tail] == block_of[o.head])
      throw InvalidInput("override (" + std::to_string(o.tail) + "," + std::to_string(o.head) +
                         ") lies inside one block");
    if (block_of[o.tail] < block_of[o.head])
      throw InvalidInput("override (" + std::to_string(o.tail) + "," + std::to_string(o.head) +
                         ") does not reverse a cross-block arc");
    builder.orient(o.tail, o.head);
  }
  return builder.build();
}

}  // namespace dwlab
