#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace dwlab {

using Vertex = std::size_t;

/// Dense bitset over the universe [0, n).
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

  static VertexSet full(std::size_t universe);
  static VertexSet of(std::size_t universe, std::span<const Vertex> members);

  static constexpr std::size_t word_count(std::size_t universe) {
    return (universe + kWordBits - 1) / kWordBits;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Vertex v) const noexcept {
    return v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U) != 0;
  }
  void insert(Vertex v) noexcept { words_[v / kWordBits] |= Word{1} << (v % kWordBits); }
  void erase(Vertex v) noexcept { words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits)); }

  std::size_t count() const noexcept;
  bool empty() const noexcept;

  /// Smallest member >= from, if any.
  std::optional<Vertex> next(Vertex from = 0) const noexcept;

  VertexSet& operator&=(const VertexSet& other) noexcept;
  VertexSet& operator|=(const VertexSet& other) noexcept;
  /// Set difference.
  VertexSet& operator-=(const VertexSet& other) noexcept;

  friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) noexcept { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) noexcept { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  bool is_subset_of(const VertexSet& other) const noexcept;

  std::span<const Word> words() const noexcept { return words_; }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        f(static_cast<Vertex>(w * kWordBits + bit));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const;

 private:
  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

/// popcount(a & b) over two equally sized word rows.
inline std::size_t intersection_count(std::span<const VertexSet::Word> a,
                                      std::span<const VertexSet::Word> b) noexcept {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

}  // namespace dwlab
