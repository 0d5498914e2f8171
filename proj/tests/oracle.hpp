// Brute-force reference implementations shared by the unit tests. Kept
// deliberately naive and independent of the library's algorithms.
#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace oracle {

using Set = std::vector<int>;

inline std::int64_t choose(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  std::int64_t c = 1;
  for (int i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

inline std::vector<Set> subsets(int n, int r) {
  std::vector<Set> out;
  Set cur;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (int v = from; v <= n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

inline bool disjoint(const Set& a, const Set& b) {
  for (int x : a) {
    if (std::find(b.begin(), b.end(), x) != b.end()) return false;
  }
  return true;
}

// Largest pairwise disjoint subcollection, by trying every subset of edges.
inline int matching_number(const std::vector<Set>& edges) {
  int best = 0;
  const std::uint32_t total = std::uint32_t{1} << edges.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    int c = __builtin_popcount(mask);
    if (c <= best) continue;
    bool ok = true;
    for (std::size_t i = 0; i < edges.size() && ok; ++i) {
      if (!(mask >> i & 1u)) continue;
      for (std::size_t j = i + 1; j < edges.size() && ok; ++j) {
        if ((mask >> j & 1u) && !disjoint(edges[i], edges[j])) ok = false;
      }
    }
    if (ok) best = c;
  }
  return best;
}

// Coordinatewise comparison of sorted lists.
inline bool dominated(const Set& g, const Set& f) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] > f[i]) return false;
  }
  return true;
}

inline int count_in_prefix(const Set& f, int m) {
  int c = 0;
  for (int x : f) c += x <= m ? 1 : 0;
  return c;
}

// |A_ell(n)| by listing every k-set.
inline std::int64_t size_A(int n, int k, int s, int ell) {
  std::int64_t c = 0;
  for (const Set& f : subsets(n, k)) c += count_in_prefix(f, ell * s + ell - 1) >= ell ? 1 : 0;
  return c;
}

}  // namespace oracle
