#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace matchlab {

// Subset of [64]; vertex v lives at bit v-1.
class VertexSet {
 public:
  static constexpr int kMaxVertex = 64;

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<int> vertices);
  static VertexSet of(std::span<const int> vertices);
  static constexpr VertexSet from_bits(std::uint64_t bits) {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }
  // [lo, hi], empty when lo > hi.
  static VertexSet interval(int lo, int hi);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int cardinality() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const {
    return v >= 1 && v <= kMaxVertex && ((bits_ >> (v - 1)) & 1u);
  }
  // 0 for the empty set.
  constexpr int min_element() const { return bits_ ? std::countr_zero(bits_) + 1 : 0; }
  constexpr int max_element() const { return bits_ ? 64 - std::countl_zero(bits_) : 0; }
  // q-th smallest element, 1-based; 0 when out of range.
  int nth(int q) const;
  std::vector<int> elements() const;

  VertexSet with(int v) const;
  VertexSet without(int v) const;
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return from_bits(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return from_bits(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return from_bits(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

  // Canonical order: cardinality first, then sorted element lists lexicographically.
  friend constexpr std::strong_ordering operator<=>(VertexSet a, VertexSet b) {
    if (a.cardinality() != b.cardinality()) return a.cardinality() <=> b.cardinality();
    std::uint64_t diff = a.bits_ ^ b.bits_;
    if (diff == 0) return std::strong_ordering::equal;
    // The smallest differing vertex belongs to the lexicographically smaller set.
    return (a.bits_ & diff & (~diff + 1)) ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  // "{1,2,3}"
  std::string to_string() const;

 private:
  std::uint64_t bits_ = 0;
};

// g << f: same size and g_i <= f_i coordinatewise. Throws on size mismatch.
bool dominates(VertexSet g, VertexSet f);

// Calls fn(VertexSet) for every r-subset of `ground` in lexicographic order.
void for_each_subset(VertexSet ground, int r, const std::function<void(VertexSet)>& fn);
std::vector<VertexSet> subsets_of_size(VertexSet ground, int r);

}  // namespace matchlab

template <>
struct std::hash<matchlab::VertexSet> {
  std::size_t operator()(matchlab::VertexSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};
