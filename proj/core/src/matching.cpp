#include "matchlab/matching.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <unordered_map>

#include "matchlab/error.hpp"

namespace matchlab {

namespace {

// f(U) = largest matching using only edges inside U. With v = min U either v
// stays uncovered or an edge whose least vertex is v is used. Subproblems are
// memoized by U; the bound |U| / (smallest edge size) cuts the search.
class Solver {
 public:
  explicit Solver(std::span<const VertexSet> edges) {
    for (VertexSet e : edges) {
      if (e.empty()) {
        has_empty_ = true;
        continue;
      }
      by_min_[e.min_element() - 1].push_back(e.bits());
      cover_ |= e.bits();
      min_size_ = std::min(min_size_, e.cardinality());
    }
  }

  int run(int cap) {
    // The empty set is disjoint from everything, itself included once.
    int extra = has_empty_ ? 1 : 0;
    if (cap <= extra) return cap;
    return extra + solve(cover_, cap - extra);
  }

 private:
  bool usable(int v, std::uint64_t avail) const {
    for (std::uint64_t e : by_min_[v]) {
      if ((e & ~avail) == 0) return true;
    }
    return false;
  }

  // Returns min(f(avail), want).
  int solve(std::uint64_t avail, int want) {
    while (avail && !usable(std::countr_zero(avail), avail)) avail &= avail - 1;
    if (avail == 0 || want <= 0) return 0;
    int ub = std::popcount(avail) / min_size_;
    if (ub == 0) return 0;
    if (auto it = memo_.find(avail); it != memo_.end()) {
      if (it->second.exact) return std::min(it->second.value, want);
      if (it->second.value >= want) return want;
    }
    int target = std::min(want, ub);
    int v = std::countr_zero(avail);
    int best = 0;
    for (std::uint64_t e : by_min_[v]) {
      if ((e & ~avail) != 0) continue;
      best = std::max(best, 1 + solve(avail & ~e, target - 1));
      if (best >= target) break;
    }
    if (best < target) best = std::max(best, solve(avail & (avail - 1), target));
    bool exact = target == ub || best < want;
    memo_[avail] = {best, exact};
    return best;
  }

  struct Entry {
    int value;
    bool exact;
  };
  std::array<std::vector<std::uint64_t>, 64> by_min_;
  std::uint64_t cover_ = 0;
  int min_size_ = 64;
  bool has_empty_ = false;
  std::unordered_map<std::uint64_t, Entry> memo_;
};

}  // namespace

int max_matching(std::span<const VertexSet> edges, int cap) {
  if (edges.empty() || cap <= 0) return 0;
  return Solver(edges).run(cap);
}

MatchingResult matching_number(const Family& fam) {
  const auto& all = fam.members();
  MatchingResult out;
  out.size = max_matching(all);
  // Greedy over the canonical order: take the first edge that still extends
  // to a maximum matching using only later, disjoint edges.
  VertexSet used;
  int remaining = out.size;
  std::vector<VertexSet> pool;
  for (std::size_t i = 0; i < all.size() && remaining > 0; ++i) {
    VertexSet e = all[i];
    if (e.intersects(used)) continue;
    VertexSet after = used | e;
    pool.clear();
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (!all[j].intersects(after)) pool.push_back(all[j]);
    }
    if (remaining == 1 || has_matching(pool, remaining - 1)) {
      out.witness.edges.push_back(e);
      used = after;
      --remaining;
    }
  }
  return out;
}

bool is_maximal(const Family& fam, int s) {
  if (!fam.uniform_k()) throw Error("maximality needs a uniform family");
  bool maximal = true;
  std::vector<VertexSet> pool;
  for_each_subset(VertexSet::interval(1, fam.n()), *fam.uniform_k(), [&](VertexSet x) {
    if (!maximal || fam.contains(x)) return;
    pool.clear();
    for (VertexSet f : fam) {
      if (!f.intersects(x)) pool.push_back(f);
    }
    if (!has_matching(pool, s)) maximal = false;
  });
  return maximal;
}

}  // namespace matchlab
