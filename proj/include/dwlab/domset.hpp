#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dwlab/tournament.hpp"

namespace dwlab {

enum class FamilyMode { Exhaustive, Randomized };

struct FamilyConfig {
  FamilyMode mode = FamilyMode::Exhaustive;
  std::uint64_t seed = 0;
  double c = 4.0;  // randomized size multiplier
};

inline constexpr std::size_t kExhaustiveFamilyCap = 20;
inline constexpr std::uint64_t kRandomFamilyCap = std::uint64_t{1} << 24;

/// Sets F ⊆ [0, n) such that every disjoint (A, B) with |A| = p, |B| = q has
/// some F ⊇ A avoiding B. Exhaustive mode is every subset (certain);
/// randomized mode samples p/(p+q)-biased subsets (covering with high probability).
class UniversalFamily {
 public:
  static UniversalFamily exhaustive(std::size_t n, std::size_t p, std::size_t q);
  static UniversalFamily randomized(std::size_t n, std::size_t p, std::size_t q, std::uint64_t seed, double c = 4.0);

  std::size_t n() const noexcept { return n_; }
  std::size_t p() const noexcept { return p_; }
  std::size_t q() const noexcept { return q_; }
  FamilyMode mode() const noexcept { return mode_; }

  std::uint64_t size() const noexcept;
  VertexSet member(std::uint64_t i) const;

 private:
  UniversalFamily(std::size_t n, std::size_t p, std::size_t q, FamilyMode mode) : n_(n), p_(p), q_(q), mode_(mode) {}

  std::size_t n_;
  std::size_t p_;
  std::size_t q_;
  FamilyMode mode_;
  std::vector<VertexSet> sets_;
};

/// ceil(c * C(p+q, p) * (p+q) * ln n) + 1.
std::uint64_t randomized_family_size(std::size_t n, std::size_t p, std::size_t q, double c);

/// Throws InvalidInput when p + q > n.
UniversalFamily lopsided_universal_family(std::size_t n, std::size_t p, std::size_t q, const FamilyConfig& config);

/// Checks the covering property over every (A, B) pair; tiny n only.
bool is_lopsided_universal(const UniversalFamily& family);

/// A dominating set of size <= s (out-neighbour convention) found through the
/// in-degree ordering and universal families, or nothing.
std::optional<VertexSet> fpt_dominating_set(const Tournament& t, std::size_t s, const FamilyConfig& config = {});

/// The last vertex of σ with its out-neighbours; size <= width(σ) + 1.
VertexSet greedy_dominating_set(const Tournament& t, const Ordering& order);

namespace serial {
std::optional<VertexSet> fpt_dominating_set(const Tournament& t, std::size_t s, const FamilyConfig& config = {});
}  // namespace serial

}  // namespace dwlab
