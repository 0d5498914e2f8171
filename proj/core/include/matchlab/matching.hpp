#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "matchlab/family.hpp"

namespace matchlab {

struct MatchingWitness {
  std::vector<VertexSet> edges;
};

struct MatchingResult {
  int size = 0;
  MatchingWitness witness;
};

// Exact nu(fam). The witness is the lexicographically least maximum matching
// when matchings are compared as sorted edge lists.
MatchingResult matching_number(const Family& fam);

// nu of an arbitrary edge list, no witness. Stops early once `cap` is reached,
// so the return value is min(nu, cap).
int max_matching(std::span<const VertexSet> edges, int cap = 64);

// nu(edges) >= t.
inline bool has_matching(std::span<const VertexSet> edges, int t) { return max_matching(edges, t) >= t; }

// No k-set of [n] outside fam can be added without pushing nu above s.
// Requires a k-uniform family.
bool is_maximal(const Family& fam, int s);

}  // namespace matchlab
