#include "matchlab/vertex_set.hpp"

#include "matchlab/error.hpp"

namespace matchlab {

namespace {

std::uint64_t bit_of(int v) {
  if (v < 1 || v > VertexSet::kMaxVertex) throw Error("vertex out of range: " + std::to_string(v));
  return std::uint64_t{1} << (v - 1);
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<int> vertices) {
  for (int v : vertices) bits_ |= bit_of(v);
}

VertexSet VertexSet::of(std::span<const int> vertices) {
  VertexSet s;
  for (int v : vertices) s.bits_ |= bit_of(v);
  return s;
}

VertexSet VertexSet::interval(int lo, int hi) {
  VertexSet s;
  for (int v = lo; v <= hi; ++v) s.bits_ |= bit_of(v);
  return s;
}

int VertexSet::nth(int q) const {
  std::uint64_t b = bits_;
  for (int i = 1; b; ++i, b &= b - 1) {
    if (i == q) return std::countr_zero(b) + 1;
  }
  return 0;
}

std::vector<int> VertexSet::elements() const {
  std::vector<int> out;
  out.reserve(cardinality());
  for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

VertexSet VertexSet::with(int v) const { return from_bits(bits_ | bit_of(v)); }
VertexSet VertexSet::without(int v) const { return from_bits(bits_ & ~bit_of(v)); }

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v : elements()) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

bool dominates(VertexSet g, VertexSet f) {
  if (g.cardinality() != f.cardinality()) throw Error("incomparable cardinalities");
  // g_i <= f_i for all i  <=>  every prefix [t] holds at least as many of g as of f.
  std::uint64_t prefix = 0;
  for (int t = 0; t < VertexSet::kMaxVertex; ++t) {
    prefix = (prefix << 1) | 1;
    if (std::popcount(g.bits() & prefix) < std::popcount(f.bits() & prefix)) return false;
  }
  return true;
}

void for_each_subset(VertexSet ground, int r, const std::function<void(VertexSet)>& fn) {
  std::vector<int> pool = ground.elements();
  int m = static_cast<int>(pool.size());
  if (r < 0 || r > m) return;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    std::uint64_t bits = 0;
    for (int i : idx) bits |= std::uint64_t{1} << (pool[i] - 1);
    fn(VertexSet::from_bits(bits));
    int i = r - 1;
    while (i >= 0 && idx[i] == m - r + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<VertexSet> subsets_of_size(VertexSet ground, int r) {
  std::vector<VertexSet> out;
  for_each_subset(ground, r, [&](VertexSet s) { out.push_back(s); });
  return out;
}

}  // namespace matchlab
