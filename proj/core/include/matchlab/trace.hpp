#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matchlab/combinatorics.hpp"
#include "matchlab/family.hpp"

namespace matchlab {

struct TraceOrigin {
  int n = 0;
  int k = 0;
  int s = 0;
};

// F_0 = { F cap [ks+k-1] : F in fam }, a mixed-size family on [ks+k-1].
class TraceFamily {
 public:
  TraceFamily(Family base, TraceOrigin origin);

  const Family& base() const { return base_; }
  const TraceOrigin& origin() const { return origin_; }
  int ground() const { return origin_.k * origin_.s + origin_.k - 1; }
  bool contains(VertexSet h) const { return base_.contains(h); }
  std::size_t size() const { return base_.size(); }

 private:
  Family base_;
  TraceOrigin origin_;
};

TraceFamily trace(const Family& fam, int k, int s);

// Sum over trace members H of C(n-ks-k+1, k-|H|); equals |fam| for maximal fam.
std::int64_t size_formula(const TraceFamily& t);

// The largest k-uniform family on [n] with the given trace.
Family expand(const TraceFamily& t);

// [ks+k-1] = D + F_1 + ... + F_s with the blocks ordered by least element.
struct BasePartition {
  VertexSet D;
  std::vector<VertexSet> blocks;

  int s() const { return static_cast<int>(blocks.size()); }
  // d_q, 1-based.
  int d(int q) const { return D.nth(q); }
  // a_q(i): q-th smallest element of block i, both 1-based.
  int a(int q, int i) const { return blocks.at(i - 1).nth(q); }
  VertexSet block(int i) const { return blocks.at(i - 1); }
};

// D is the lexicographically first (k-1)-set whose complement splits into s
// trace members of size k; blocks minimize (sum a_1, sum a_2, ...) and then
// the sorted block list. Throws "family not partitionable".
BasePartition base_partition(const TraceFamily& t);
BasePartition base_partition(const Family& fam, int k, int s);

// w(H) = C(n-ks-k+1, k-|H|) / C(s-v, k-v); undefined (nullopt) when s < k.
std::optional<Rational> weight(const TraceOrigin& o, int size, int width);

struct RestrictionMember {
  VertexSet set;
  int width = 0;
  std::optional<Rational> weight;
};

struct Restriction {
  std::vector<int> R;
  VertexSet X;
  std::vector<RestrictionMember> members;

  bool contains(VertexSet h) const;
  // Throws when any weight is undefined.
  Rational total_weight() const;
};

// H(R): trace members inside X(R) = D + blocks in R. R is 1-based.
Restriction restriction(const TraceFamily& t, const BasePartition& bp, std::vector<int> R, bool with_weights = true);

struct CountingLemmaReport {
  int n = 0;
  int k = 0;
  int s = 0;
  std::int64_t lhs = 0;
  Rational rhs;
  bool equal = false;
};

// |fam| against the sum over R in C([s],k) of the restriction weights.
// fam must be k-uniform, stable, maximal, nu = s, and s >= k.
CountingLemmaReport counting_lemma_check(const Family& fam, int k, int s);

// Restriction weight of A_ell(n) at R = (1..k).
Rational f_value(int ell, int n, int k, int s);
// The same sum at an arbitrary R, for the independence check.
Rational f_value_at(int ell, int n, int k, int s, const std::vector<int>& R);

struct WeightBoundReport {
  int n = 0;
  int k = 0;
  int s = 0;
  std::vector<int> R;
  Rational value;
  Rational bound;
  int best_ell = 0;
  bool holds = false;
};

// Restriction weight of R against max over ell of f(ell). With
// check_avoid_one the hypothesis nu(fam avoiding 1) = s is enforced too.
WeightBoundReport weight_bound_check(const Family& fam, int k, int s, const std::vector<int>& R,
                                     bool check_avoid_one = true);

// One named structural fact evaluated on a concrete family.
struct PropertyCheck {
  std::string name;
  bool applicable = true;
  bool holds = true;
  std::string detail;
};

// Facts about the trace and its base partition that hold for stable maximal
// families with nu = s; each check records whether its hypotheses apply.
std::vector<PropertyCheck> check_trace_properties(const Family& fam, int k, int s);

}  // namespace matchlab
