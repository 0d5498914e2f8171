#include <gtest/gtest.h>

#include <map>
#include <random>

#include "matchlab/error.hpp"
#include "matchlab/extremal.hpp"
#include "matchlab/matching.hpp"
#include "matchlab/search.hpp"
#include "matchlab/trace.hpp"
#include "oracle.hpp"

using namespace matchlab;

namespace {

Family A(int n, int k, int s, int ell) { return build_A({n, k, s, ell}); }

// Restriction weight sum over all R, computed from scratch with integer
// binomials.
Rational oracle_rhs(const TraceFamily& t, const BasePartition& bp) {
  const int n = t.origin().n, k = t.origin().k, s = t.origin().s;
  Rational total = 0;
  for (const auto& R : oracle::subsets(s, k)) {
    VertexSet X = bp.D;
    for (int r : R) X = X | bp.block(r);
    for (VertexSet h : t.base()) {
      if (!h.subset_of(X)) continue;
      int v = 0;
      for (int r : R) v += h.intersects(bp.block(r)) ? 1 : 0;
      total += Rational(oracle::choose(n - k * s - k + 1, k - h.cardinality()), oracle::choose(s - v, k - v));
    }
  }
  return total;
}

std::vector<Family> corpus() {
  std::vector<Family> out{A(13, 3, 3, 1), A(13, 3, 3, 2), A(13, 3, 3, 3), A(12, 3, 3, 1), A(12, 3, 3, 2)};
  std::mt19937_64 rng(3);
  for (int i = 0; i < 12; ++i) out.push_back(random_saturated_stable(12 + i % 2, 3, 3, rng));
  return out;
}

}  // namespace

TEST(Trace, Examples) {
  Family ak = A(11, 3, 3, 3);
  TraceFamily t = trace(ak, 3, 3);
  EXPECT_EQ(t.base().members(), ak.members());
  TraceFamily t1 = trace(A(10, 3, 2, 1), 3, 2);
  EXPECT_TRUE(t1.contains({1}));
  EXPECT_TRUE(t1.contains({2}));
  EXPECT_EQ(matching_number(trace(A(13, 3, 3, 2), 3, 3).base()).size, 3);
  EXPECT_THROW(trace(A(10, 3, 3, 1), 3, 3), Error);
}

TEST(Trace, SizeFormula) {
  TraceFamily t = trace(A(10, 3, 2, 1), 3, 2);
  std::map<int, int> by_size;
  for (VertexSet h : t.base()) ++by_size[h.cardinality()];
  EXPECT_EQ(by_size[1], 2);
  EXPECT_EQ(by_size[2], 13);
  EXPECT_EQ(by_size[3], 36);
  EXPECT_EQ(size_formula(t), 64);
  EXPECT_EQ(size_formula(trace(A(13, 3, 3, 1), 3, 3)), 166);
  EXPECT_EQ(size_formula(trace(A(17, 3, 3, 3), 3, 3)), 165);
}

TEST(Trace, ExpandInvertsTraceOnMaximalFamilies) {
  for (const Family& f : corpus()) EXPECT_EQ(expand(trace(f, 3, 3)), f);
}

TEST(BasePartition, DiagonalFormula) {
  for (int s = 2; s <= 3; ++s) {
    int n = 3 * s + 4;
    EXPECT_EQ(base_partition(A(n, 3, s, 1), 3, s).D, (VertexSet{s + 1, s + 2}));
    EXPECT_EQ(base_partition(A(n, 3, s, 2), 3, s).D, (VertexSet{1, 2 * s + 2}));
    EXPECT_EQ(base_partition(A(n, 3, s, 3), 3, s).D, (VertexSet{1, 2}));
  }
}

TEST(BasePartition, Invariants) {
  for (const Family& f : corpus()) {
    TraceFamily t = trace(f, 3, 3);
    BasePartition bp = base_partition(t);
    VertexSet uni = bp.D;
    EXPECT_EQ(bp.D.cardinality(), 2);
    EXPECT_FALSE(t.contains(bp.D));
    for (VertexSet b : bp.blocks) {
      EXPECT_FALSE(uni.intersects(b));
      EXPECT_TRUE(t.contains(b));
      uni = uni | b;
    }
    EXPECT_EQ(uni, VertexSet::interval(1, 11));
  }
}

TEST(BasePartition, NotPartitionable) {
  Family f(8, {{1, 2, 3}}, 3);
  try {
    base_partition(f, 3, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "family not partitionable");
  }
}

TEST(Weights, DefinitionValues) {
  TraceOrigin o{17, 3, 4};
  EXPECT_EQ(*weight(o, 3, 1), Rational(1, 3));
  EXPECT_EQ(*weight(o, 2, 1), Rational(1));
  EXPECT_FALSE(weight({10, 3, 2}, 3, 1));
}

TEST(Restriction, A2ProfileOneBlock) {
  Family f = A(13, 3, 3, 2);
  TraceFamily t = trace(f, 3, 3);
  BasePartition bp = base_partition(t);
  for (int r = 1; r <= 3; ++r) {
    Restriction res = restriction(t, bp, {r});
    std::map<int, int> by_size;
    for (const auto& m : res.members) {
      ++by_size[m.set.cardinality()];
      EXPECT_GE(m.width, 1);
      EXPECT_TRUE(m.set.subset_of(res.X));
    }
    EXPECT_EQ(by_size[2], 3);
    EXPECT_EQ(by_size[3], 7);
    EXPECT_EQ(res.X.cardinality(), 5);
  }
  EXPECT_THROW(restriction(t, bp, {1, 2, 3, 3}), Error);
}

TEST(CountingLemma, Examples) {
  auto r3 = counting_lemma_check(A(13, 3, 3, 3), 3, 3);
  EXPECT_EQ(r3.lhs, 165);
  EXPECT_EQ(r3.rhs, 165);
  auto r1 = counting_lemma_check(A(13, 3, 3, 1), 3, 3);
  EXPECT_EQ(r1.rhs, 166);
  EXPECT_TRUE(r1.equal);
  auto r2 = counting_lemma_check(A(17, 3, 4, 2), 3, 4);
  EXPECT_TRUE(r2.equal);
  EXPECT_EQ(r2.lhs, size_A({17, 3, 4, 2}));
  try {
    counting_lemma_check(A(10, 3, 2, 1), 3, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "lemma requires s ≥ k");
  }
  EXPECT_THROW(counting_lemma_check(Family(13, {{1, 2, 3}}, 3), 3, 3), PreconditionError);
}

TEST(CountingLemma, AgreesWithIndependentSum) {
  for (const Family& f : corpus()) {
    TraceFamily t = trace(f, 3, 3);
    BasePartition bp = base_partition(t);
    auto r = counting_lemma_check(f, 3, 3);
    EXPECT_EQ(r.rhs, oracle_rhs(t, bp));
    EXPECT_EQ(r.rhs, Rational(static_cast<std::int64_t>(f.size())));
  }
}

TEST(FValue, Examples) {
  EXPECT_EQ(f_value(3, 13, 3, 3), 165);
  EXPECT_EQ(f_value(1, 13, 3, 3), 166);
  EXPECT_EQ(f_value(1, 17, 3, 4) - f_value(3, 17, 3, 4), Rational(15, 2));
}

TEST(FValue, IndependentOfR) {
  for (int ell = 1; ell <= 3; ++ell) {
    Rational first = f_value(ell, 17, 3, 4);
    for (const auto& R : oracle::subsets(4, 3)) EXPECT_EQ(f_value_at(ell, 17, 3, 4, R), first);
  }
}

TEST(WeightBound, Examples) {
  auto a2 = weight_bound_check(A(13, 3, 3, 2), 3, 3, {1, 2, 3});
  EXPECT_TRUE(a2.holds);
  // A_1(13) avoiding vertex 1 has matching number 2, so only the relaxed
  // check applies; the value then meets the bound at ell = 1.
  EXPECT_THROW(weight_bound_check(A(13, 3, 3, 1), 3, 3, {1, 2, 3}), PreconditionError);
  auto a1 = weight_bound_check(A(13, 3, 3, 1), 3, 3, {1, 2, 3}, false);
  EXPECT_EQ(a1.value, a1.bound);
  EXPECT_EQ(a1.value, 166);
  EXPECT_EQ(a1.best_ell, 1);
  auto a3 = weight_bound_check(A(13, 3, 3, 3), 3, 3, {1, 2, 3});
  EXPECT_EQ(a3.value, f_value(3, 13, 3, 3));
  EXPECT_TRUE(a3.holds);
}

TEST(TraceProperties, HoldOnCorpus) {
  for (const Family& f : corpus()) {
    for (const auto& c : check_trace_properties(f, 3, 3)) {
      if (c.applicable) EXPECT_TRUE(c.holds) << c.name << " " << c.detail;
    }
  }
}
