#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>

#include "matchlab/family.hpp"
#include "matchlab/trace.hpp"

namespace matchlab {

// Adds every k-set of [n], in lexicographic order, whose addition keeps
// nu <= s. fam must be k-uniform (or empty with uniform_k set).
Family saturate(const Family& fam, int s);

// A stable, maximal k-uniform family on [n] with nu = s: random down-closures
// are added while nu stays <= s, then saturation and stabilization alternate
// until both are fixed points.
Family random_saturated_stable(int n, int k, int s, std::mt19937_64& rng);

enum class Construction { A_k, A_1, Other };
std::string to_string(Construction c);

struct SearchOptions {
  // Require nu(trace members avoiding vertex 1) = s and drop singleton traces.
  bool avoid_one = false;
  // s = 3 is accepted only with this set and a checkpoint path.
  bool allow_large = false;
  std::optional<std::filesystem::path> checkpoint;
  // 0 = default_threads().
  int threads = 0;
  // Branch decisions expanded before handing subtrees to workers.
  int split_depth = 12;
};

struct SearchResult {
  int n = 0;
  int k = 0;
  int s = 0;
  std::int64_t max_size = 0;
  Family witness;
  Family witness_trace;
  std::int64_t nodes_explored = 0;
  std::int64_t subproblems = 0;
  Construction matched = Construction::Other;
};

// m(n,k,s) by branch-and-bound over down-sets of the trace poset on
// subsets of [ks+k-1] of size <= k. Ties go to the canonically least trace.
SearchResult max_stable(int n, int k, int s, const SearchOptions& opts = {});

// Maximum |F| over all F in C([n],k) with nu(F) = s, by full enumeration.
// Requires C(n,k) <= 20.
std::int64_t naive_max(int n, int k, int s);

// MATCHLAB_THREADS if set and positive, else hardware concurrency (>= 1).
int default_threads();

}  // namespace matchlab
