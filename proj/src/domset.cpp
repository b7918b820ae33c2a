#include "dwlab/domset.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <string>

#include "dwlab/approx.hpp"
#include "dwlab/error.hpp"
#include "dwlab/random.hpp"

namespace dwlab {

namespace {

double binomial(std::size_t n, std::size_t k) {
  double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

void check_params(std::size_t n, std::size_t p, std::size_t q) {
  if (p + q > n)
    throw InvalidInput("universal family needs p + q <= n (p=" + std::to_string(p) + ", q=" + std::to_string(q) +
                       ", n=" + std::to_string(n) + ")");
}

}  // namespace

std::uint64_t randomized_family_size(std::size_t n, std::size_t p, std::size_t q, double c) {
  const double logn = n > 1 ? std::log(static_cast<double>(n)) : 0.0;
  const double raw = std::ceil(c * binomial(p + q, p) * static_cast<double>(p + q) * logn);
  if (!(raw < static_cast<double>(kRandomFamilyCap))) return kRandomFamilyCap + 1;
  return static_cast<std::uint64_t>(raw) + 1;
}

UniversalFamily UniversalFamily::exhaustive(std::size_t n, std::size_t p, std::size_t q) {
  check_params(n, p, q);
  if (n > kExhaustiveFamilyCap) throw CapExceeded("exhaustive universal family", n, kExhaustiveFamilyCap);
  return UniversalFamily(n, p, q, FamilyMode::Exhaustive);
}

UniversalFamily UniversalFamily::randomized(std::size_t n, std::size_t p, std::size_t q, std::uint64_t seed,
                                            double c) {
  check_params(n, p, q);
  if (!(c > 0)) throw InvalidInput("family size multiplier must be positive");
  const std::uint64_t count = randomized_family_size(n, p, q, c);
  if (count > kRandomFamilyCap) throw CapExceeded("randomized universal family", count, kRandomFamilyCap);
  UniversalFamily f(n, p, q, FamilyMode::Randomized);
  const double keep = p + q == 0 ? 0.5 : static_cast<double>(p) / static_cast<double>(p + q);
  Xorshift64Star rng(seed);
  f.sets_.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    VertexSet s(n);
    for (Vertex v = 0; v < n; ++v)
      if (rng.uniform() < keep) s.insert(v);
    f.sets_.push_back(std::move(s));
  }
  return f;
}

std::uint64_t UniversalFamily::size() const noexcept {
  return mode_ == FamilyMode::Exhaustive ? std::uint64_t{1} << n_ : sets_.size();
}

VertexSet UniversalFamily::member(std::uint64_t i) const {
  if (mode_ == FamilyMode::Randomized) return sets_.at(i);
  VertexSet s(n_);
  for (Vertex v = 0; v < n_; ++v)
    if ((i >> v) & 1U) s.insert(v);
  return s;
}

UniversalFamily lopsided_universal_family(std::size_t n, std::size_t p, std::size_t q, const FamilyConfig& config) {
  if (config.mode == FamilyMode::Exhaustive) return UniversalFamily::exhaustive(n, p, q);
  return UniversalFamily::randomized(n, p, q, config.seed, config.c);
}

bool is_lopsided_universal(const UniversalFamily& family) {
  const std::size_t n = family.n();
  if (n > 16) throw CapExceeded("is_lopsided_universal", n, 16);
  std::vector<std::uint64_t> masks(family.size());
  for (std::uint64_t i = 0; i < family.size(); ++i) {
    const VertexSet s = family.member(i);
    masks[i] = s.words().empty() ? 0 : s.words()[0];
  }
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t a = 0; a <= all; ++a) {
    if (static_cast<std::size_t>(std::popcount(a)) != family.p()) continue;
    const std::uint64_t rest = all & ~a;
    // every q-subset b of rest
    for (std::uint64_t b = rest;; b = (b - 1) & rest) {
      if (static_cast<std::size_t>(std::popcount(b)) == family.q()) {
        bool covered = false;
        for (std::uint64_t f : masks)
          if ((f & a) == a && (f & b) == 0) {
            covered = true;
            break;
          }
        if (!covered) return false;
      }
      if (b == 0) break;
    }
  }
  return true;
}

VertexSet greedy_dominating_set(const Tournament& t, const Ordering& order) {
  if (order.size() != t.size()) throw InvalidInput("ordering and tournament differ in size");
  const Vertex last = order[order.size() - 1];
  VertexSet s = t.out_neighbours(last);
  s.insert(last);
  return s;
}

namespace {

// Smallest suffix union C_j ∪ ... ∪ C_l of T[F]'s condensation that dominates T with size <= s.
std::optional<VertexSet> try_member(const Tournament& t, const Ordering& order, const VertexSet& f, std::size_t s) {
  if (f.empty()) return std::nullopt;
  const auto comps = scc_in_order(t, order, f);
  VertexSet suffix(t.size());
  for (std::size_t j = comps.size(); j-- > 0;) {
    for (Vertex v : comps[j]) suffix.insert(v);
    if (suffix.count() > s) break;
    if (is_dominating_set(t, suffix)) return suffix;
  }
  return std::nullopt;
}

struct Plan {
  Ordering order;
  std::vector<UniversalFamily> families;
};

Plan plan(const Tournament& t, std::size_t s, const FamilyConfig& config) {
  if (s == 0) throw InvalidInput("dominating set size bound must be >= 1");
  const ApproxResult approx = approx_degreewidth(t);
  Plan p{approx.ordering, {}};
  const std::size_t n = t.size();
  if (config.mode == FamilyMode::Exhaustive) {
    // Every subset already; the family does not depend on p.
    p.families.push_back(UniversalFamily::exhaustive(n, 0, 0));
    return p;
  }
  for (std::size_t size = 1; size <= s && size <= n; ++size) {
    const std::size_t q = std::min(approx.width * size, n - size);
    p.families.push_back(
        UniversalFamily::randomized(n, size, q, config.seed + 0x9E3779B97F4A7C15ULL * size, config.c));
  }
  return p;
}

std::optional<VertexSet> finish(const Tournament& t, std::size_t s, std::optional<VertexSet> found) {
  if (found && (!is_dominating_set(t, *found) || found->count() > s))
    throw Error("fpt_dominating_set: produced an invalid set");
  return found;
}

}  // namespace

namespace serial {

std::optional<VertexSet> fpt_dominating_set(const Tournament& t, std::size_t s, const FamilyConfig& config) {
  const Plan p = plan(t, s, config);
  for (const UniversalFamily& family : p.families)
    for (std::uint64_t i = 0; i < family.size(); ++i)
      if (auto found = try_member(t, p.order, family.member(i), s)) return finish(t, s, found);
  return std::nullopt;
}

}  // namespace serial

std::optional<VertexSet> fpt_dominating_set(const Tournament& t, std::size_t s, const FamilyConfig& config) {
  const Plan p = plan(t, s, config);
  for (const UniversalFamily& family : p.families) {
    const auto count = static_cast<std::int64_t>(family.size());
    std::atomic<std::int64_t> best{count};
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < count; ++i) {
      if (i >= best.load(std::memory_order_relaxed)) continue;
      if (try_member(t, p.order, family.member(static_cast<std::uint64_t>(i)), s)) {
        std::int64_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
    if (best < count)
      return finish(t, s, try_member(t, p.order, family.member(static_cast<std::uint64_t>(best.load())), s));
  }
  return std::nullopt;
}

}  // namespace dwlab
