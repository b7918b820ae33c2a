#include <algorithm>
#include <array>
#include <chrono>
#include <set>

#include "doctest.h"
#include "dwlab/error.hpp"
#include "dwlab/generators.hpp"
#include "dwlab/oracles.hpp"
#include "dwlab/sparse.hpp"
#include "support/brute.hpp"
#include "support/composites.hpp"

using namespace dwlab;

namespace {

std::vector<Vertex> labels(std::initializer_list<Vertex> one_based) {
  std::vector<Vertex> out;
  for (Vertex v : one_based) out.push_back(v - 1);
  return out;
}

// Some sparse ordering leaves every vertex of m free.
bool brute_m_sparse(const Tournament& t, const std::vector<Vertex>& m) {
  for (const Ordering& o : brute_sparse_orderings(t)) {
    const BackwardProfile p = backward_profile(t, o);
    if (std::all_of(m.begin(), m.end(), [&](Vertex v) { return p.per_vertex[v] == 0; })) return true;
  }
  return false;
}

std::vector<Vertex> free_of(const Tournament& t, const Ordering& o) {
  const BackwardProfile p = backward_profile(t, o);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < t.size(); ++v)
    if (p.per_vertex[v] == 0) out.push_back(v);
  return out;
}

std::vector<Vertex> subset_of(std::size_t n, std::uint64_t bits) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if ((bits >> v) & 1U) out.push_back(v);
  return out;
}

}  // namespace

TEST_CASE("canonical U orderings") {
  CHECK(canonical_u_sequence(UOrderingKind::Pi, 8) == labels({1, 3, 2, 5, 4, 7, 6, 8}));
  CHECK(canonical_u_sequence(UOrderingKind::Pi_1, 7) == labels({2, 1, 4, 3, 6, 5, 7}));
  CHECK(canonical_u_sequence(UOrderingKind::Pi_n, 7) == labels({1, 3, 2, 5, 4, 7, 6}));
  CHECK(canonical_u_sequence(UOrderingKind::Pi_1_n, 8) == labels({2, 1, 4, 3, 6, 5, 8, 7}));
  CHECK(canonical_u_sequence(UOrderingKind::PiPrime_of_U4, 4) == labels({2, 4, 1, 3}));
  CHECK(canonical_u_sequence(UOrderingKind::Pi_2_of_U3, 3) == labels({3, 2, 1}));

  CHECK_THROWS_AS(canonical_u_sequence(UOrderingKind::Pi, 7), InvalidInput);
  CHECK_THROWS_AS(canonical_u_sequence(UOrderingKind::Pi_1_n, 5), InvalidInput);
  CHECK_THROWS_AS(canonical_u_sequence(UOrderingKind::Pi_1, 6), InvalidInput);
  CHECK_THROWS_AS(canonical_u_sequence(UOrderingKind::Pi_n, 4), InvalidInput);
  CHECK_THROWS_AS(canonical_u_sequence(UOrderingKind::Pi_2_of_U3, 5), InvalidInput);
  CHECK_THROWS_AS(canonical_u_sequence(UOrderingKind::PiPrime_of_U4, 6), InvalidInput);

  for (std::size_t n = 2; n <= 24; ++n) {
    const Tournament u = u_tournament(n);
    std::vector<UOrderingKind> kinds;
    if (n % 2 == 0) kinds = {UOrderingKind::Pi, UOrderingKind::Pi_1_n};
    else kinds = {UOrderingKind::Pi_1, UOrderingKind::Pi_n};
    if (n == 3) kinds.push_back(UOrderingKind::Pi_2_of_U3);
    if (n == 4) kinds.push_back(UOrderingKind::PiPrime_of_U4);
    for (UOrderingKind k : kinds) {
      const Ordering o = canonical_u_ordering(k, n);
      CHECK(backward_profile(u, o).width <= 1);
      CHECK(free_of(u, o) == free_labels(k, n));
    }
  }
}

TEST_CASE("sparse orderings of U_n are exactly the canonical ones") {
  for (std::size_t n = 5; n <= 9; ++n) {
    const auto found = brute_sparse_orderings(u_tournament(n));
    std::set<std::vector<Vertex>> got;
    for (const Ordering& o : found) got.insert({o.vertices().begin(), o.vertices().end()});
    std::set<std::vector<Vertex>> want;
    if (n % 2 == 0) {
      want.insert(canonical_u_sequence(UOrderingKind::Pi, n));
      want.insert(canonical_u_sequence(UOrderingKind::Pi_1_n, n));
    } else {
      want.insert(canonical_u_sequence(UOrderingKind::Pi_1, n));
      want.insert(canonical_u_sequence(UOrderingKind::Pi_n, n));
    }
    CHECK(got == want);
  }
}

TEST_CASE("positions of the endpoints in sparse orderings of U_n") {
  for (std::size_t n = 3; n <= 9; ++n) {
    const Tournament u = u_tournament(n);
    for (const Ordering& o : brute_sparse_orderings(u)) {
      for (Vertex v = 0; v < n; ++v) {
        const std::size_t i = u.in_degree(v);
        const std::size_t pos = o.position(v) + 1;
        CHECK((pos >= i && pos <= i + 2));
      }
      if (n > 4) {
        CHECK(o.position(0) <= 1);
        CHECK(o.position(n - 1) >= n - 2);
        for (std::size_t p = 0; p + 1 < n; ++p) CHECK(o[p + 1] != o[p] + 1);
      }
    }
  }
}

TEST_CASE("is_uk_m_sparse") {
  const std::array<Vertex, 2> ends6{0, 5};
  CHECK(is_uk_m_sparse(6, ends6));
  const std::array<Vertex, 2> ends5{0, 4};
  CHECK_FALSE(is_uk_m_sparse(5, ends5));
  const std::array<Vertex, 1> mid3{1};
  CHECK(is_uk_m_sparse(3, mid3));
  const std::array<Vertex, 1> bad{7};
  CHECK_THROWS_AS(is_uk_m_sparse(3, bad), InvalidInput);

  for (std::size_t k = 2; k <= 8; ++k) {
    const Tournament u = u_tournament(k);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
      const auto m = subset_of(k, bits);
      CHECK(is_uk_m_sparse(k, m) == brute_m_sparse(u, m));
    }
  }
}

TEST_CASE("get_u_subtournament") {
  // U5 dominating an acyclic tail: the chain stops at U5.
  const std::array<Tournament, 2> blocks{u_tournament(5), acyclic(3)};
  const Tournament t = dominate_join(blocks);
  const UChain c = get_u_subtournament(t, {0, 1});
  CHECK(c.vertices == std::vector<Vertex>{0, 1, 2, 3, 4});
  CHECK(c.closure == Closure::Dominates);
  const std::array<Vertex, 5> x{0, 1, 2, 3, 4};
  CHECK(domination_relation(t, x).kind == DominationKind::Dominates);

  const UChain whole = get_u_subtournament(u_tournament(6), {0, 1});
  CHECK(whole.vertices.size() == 6);
  CHECK(whole.closure == Closure::Dominates);

  // One reversed arc from a high in-degree tail vertex into U4.
  const std::array<Tournament, 2> qb{u_tournament(4), acyclic(6)};
  const std::array<Override, 1> over{Override{9, 3}};
  const Tournament q = dominate_join(qb, over);
  const UChain qc = get_u_subtournament(q, {0, 1});
  CHECK(qc.closure == Closure::QuasiDominates);
  CHECK(qc.vertices == std::vector<Vertex>{0, 1, 2, 3});
  const DominationRelation rel = domination_relation(q, qc.vertices);
  CHECK(rel.kind == DominationKind::QuasiDominates);
  CHECK(rel.b == qc.b);
  CHECK(rel.a == qc.a);

  CHECK_THROWS_AS(get_u_subtournament(u_tournament(5), {0, 2}), InvalidInput);
  CHECK_THROWS_AS(get_u_subtournament(u_tournament(5), {0}), InvalidInput);
}

TEST_CASE("is_m_sparse examples") {
  CHECK_FALSE(is_sparse(rotational(2)).has_value());
  const auto u9 = is_sparse(u_tournament(9));
  REQUIRE(u9);
  CHECK(backward_profile(u_tournament(9), u9->ordering).width <= 1);
  const std::array<Vertex, 2> ends{0, 4};
  CHECK_FALSE(is_m_sparse(u_tournament(5), VertexSet::of(5, ends)).has_value());
  CHECK(is_sparse(acyclic(1)).has_value());
  CHECK(is_sparse(acyclic(7))->ordering == Ordering::identity(7));
}

TEST_CASE("is_m_sparse agrees with brute force and respects M") {
  for (std::uint64_t seed = 0; seed < 700; ++seed) {
    const bool composite = seed % 2 == 0;
    const std::size_t n = 2 + seed % 7;
    const Tournament t = composite ? composites::u_composite(seed, {8, 6, 2}) : random_tournament(n, seed);
    const std::uint64_t bits = (seed * 0x9E3779B97F4A7C15ULL) >> 58;
    const auto m = subset_of(t.size(), bits & ((std::uint64_t{1} << t.size()) - 1) & 0x15);
    const auto cert = is_m_sparse(t, VertexSet::of(t.size(), m));
    CHECK(cert.has_value() == brute_m_sparse(t, m));
    if (cert) {
      const BackwardProfile p = backward_profile(t, cert->ordering);
      CHECK(p.width <= 1);
      for (Vertex v : m) CHECK(p.per_vertex[v] == 0);
    }
  }
}

TEST_CASE("restriction: M-sparse tournaments stay sparse on subsets") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Tournament t = composites::u_composite(seed + 5000, {9, 6, 1});
    const auto m = subset_of(t.size(), seed & 0x5);
    const VertexSet mset = VertexSet::of(t.size(), m);
    if (!is_m_sparse(t, mset)) continue;
    std::vector<Vertex> x = subset_of(t.size(), (seed * 2654435761U) | 1);
    const InducedTournament sub = induced(t, x);
    VertexSet msub(x.size());
    for (Vertex v : m)
      if (sub.remap[v]) msub.insert(*sub.remap[v]);
    CHECK(is_m_sparse(sub.tournament, msub).has_value());
  }
}

TEST_CASE("certificate decomposition invariants") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Tournament t = composites::u_composite(seed + 9000, {20, 7, 2});
    const auto cert = is_sparse(t);
    if (!cert) continue;
    std::size_t total = 0;
    std::vector<Vertex> later(t.size());
    VertexSet rest = VertexSet::full(t.size());
    for (const SparseBlock& b : cert->blocks) {
      total += b.chain.vertices.size();
      CHECK(b.ordering.size() == b.chain.vertices.size());
      const InducedTournament sub = induced(t, rest);
      std::vector<Vertex> local;
      for (Vertex v : b.chain.vertices) local.push_back(*sub.remap[v]);
      const Tournament& s = sub.tournament;
      if (local.size() >= 2) {
        CHECK(s.in_degree(local[0]) == 1);
        for (std::size_t i = 1; i < local.size(); ++i) {
          // A dominating chain closes with w, which sits like v_k in U_k (in-degree k-2).
          const bool closing = i + 1 == local.size() && b.chain.closure == Closure::Dominates;
          CHECK(s.in_degree(local[i]) == (closing ? i - 1 : i) + (closing && i == 1 ? 1 : 0));
          CHECK(s.has_arc(local[i], local[i - 1]));
        }
        const Tournament u = u_tournament(local.size());
        for (std::size_t i = 0; i < local.size(); ++i)
          for (std::size_t j = 0; j < local.size(); ++j)
            if (i != j) CHECK(s.has_arc(local[i], local[j]) == u.has_arc(i, j));
      }
      if (local.size() < s.size()) {
        const DominationRelation rel = domination_relation(s, local);
        switch (b.chain.closure) {
          case Closure::Dominates: CHECK(rel.kind == DominationKind::Dominates); break;
          case Closure::QuasiDominates:
            CHECK(rel.kind == DominationKind::QuasiDominates);
            CHECK(sub.original[rel.b] == b.chain.b);
            CHECK(sub.original[rel.a] == b.chain.a);
            break;
          case Closure::Pendant:
            CHECK(local.size() == 1);
            CHECK(s.in_degree(local[0]) == 1);
            CHECK(s.has_arc(*sub.remap[b.chain.b], local[0]));
            break;
        }
      }
      for (Vertex v : b.chain.vertices) rest.erase(v);
    }
    CHECK(total == t.size());
  }
}

TEST_CASE("is_sparse agrees with exact degreewidth on random instances") {
  for (std::uint64_t seed = 0; seed < 3000; ++seed) {
    const std::size_t n = 3 + seed % 7;
    const Tournament t = seed % 3 == 0 ? composites::u_composite(seed, {9, 5, 2}) : random_tournament(n, seed);
    CHECK(is_sparse(t).has_value() == (exact_degreewidth(t).value <= 1));
  }
}

TEST_CASE("forbidden patterns") {
  const Tournament u8 = u_tournament(8);
  const auto pi = find_forbidden_pattern(u8, canonical_u_ordering(UOrderingKind::Pi, 8));
  REQUIRE(pi);
  CHECK(*pi == ForbiddenPattern{0, 8, PatternKind::Pi_U2k});
  CHECK_FALSE(find_forbidden_pattern(u8, canonical_u_ordering(UOrderingKind::Pi_1_n, 8)).has_value());
  const auto prime = find_forbidden_pattern(u_tournament(4), canonical_u_ordering(UOrderingKind::PiPrime_of_U4, 4));
  REQUIRE(prime);
  CHECK(*prime == ForbiddenPattern{0, 4, PatternKind::PiPrime_U4});
  const auto pair = find_forbidden_pattern(u_tournament(2), Ordering::identity(2));
  REQUIRE(pair);
  CHECK(*pair == ForbiddenPattern{0, 2, PatternKind::Pi_U2k});

  CHECK(eliminate_forbidden_patterns(u8, canonical_u_ordering(UOrderingKind::Pi, 8)) ==
        canonical_u_ordering(UOrderingKind::Pi_1_n, 8));
  CHECK(eliminate_forbidden_patterns(acyclic(6), Ordering::identity(6)) == Ordering::identity(6));
  CHECK(eliminate_forbidden_patterns(u_tournament(4), canonical_u_ordering(UOrderingKind::PiPrime_of_U4, 4)) ==
        Ordering(labels({2, 1, 4, 3})));

  CHECK_THROWS_AS(find_forbidden_pattern(rotational(2), Ordering::identity(5)), NotSparse);
  CHECK_THROWS_AS(eliminate_forbidden_patterns(rotational(2), Ordering::identity(5)), NotSparse);

  // Pi(U_2k) embedded after a prefix, in every length.
  for (std::size_t k = 1; k <= 6; ++k) {
    const std::array<Tournament, 3> blocks{acyclic(2), u_tournament(2 * k), acyclic(1)};
    const Tournament t = dominate_join(blocks);
    std::vector<Vertex> perm{0, 1};
    for (Vertex v : canonical_u_sequence(UOrderingKind::Pi, 2 * k)) perm.push_back(v + 2);
    perm.push_back(2 * k + 2);
    const auto p = find_forbidden_pattern(t, Ordering(perm));
    REQUIRE(p);
    CHECK(*p == ForbiddenPattern{2, 2 * k, PatternKind::Pi_U2k});
    const Ordering fixed = eliminate_forbidden_patterns(t, Ordering(perm));
    CHECK(backward_profile(t, fixed).total_backward == k - 1);
  }
}

TEST_CASE("fast_sparse") {
  const FasResult u8 = fast_sparse(u_tournament(8));
  std::set<Arc> arcs(u8.arcs.begin(), u8.arcs.end());
  CHECK(arcs == std::set<Arc>{{2, 1}, {4, 3}, {6, 5}});
  CHECK(backward_profile(u_tournament(8), canonical_u_ordering(UOrderingKind::Pi, 8)).total_backward == 4);
  CHECK(fast_sparse(acyclic(7)).arcs.empty());
  CHECK_THROWS_AS(fast_sparse(rotational(2)), NotSparse);

  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const Tournament t = composites::u_composite(seed + 777, {14, 7, 2});
    if (!is_sparse(t)) continue;
    ++checked;
    const FasResult r = fast_sparse(t);
    CHECK(r.arcs.size() == exact_fas(t).value);
    CHECK(backward_profile(t, r.ordering).width <= 1);
    CHECK_FALSE(find_forbidden_pattern(t, r.ordering).has_value());
  }
  CHECK(checked > 100);
}

TEST_CASE("is_sparse runtime grows no worse than cubically") {
  using clock = std::chrono::steady_clock;
  const auto time_at = [](std::size_t n) {
    const Tournament t = composites::chain_composite(n, n);
    double best = 1e30;
    for (int rep = 0; rep < 3; ++rep) {
      const auto start = clock::now();
      const auto cert = is_sparse(t);
      const double s = std::chrono::duration<double>(clock::now() - start).count();
      REQUIRE(cert.has_value());
      best = std::min(best, s);
    }
    return best;
  };
  const double small = std::max(time_at(250), 1e-4);
  const double large = time_at(2000);
  MESSAGE("is_sparse: n=250 " << small << " s, n=2000 " << large << " s");
  CHECK(large / small <= 8.0 * 8.0 * 8.0 * 2.0);
}
