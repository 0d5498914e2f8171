#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "matchlab/error.hpp"
#include "matchlab/extremal.hpp"
#include "matchlab/matching.hpp"
#include "matchlab/search.hpp"

using namespace matchlab;

namespace {

SearchOptions threads(int t) {
  SearchOptions o;
  o.threads = t;
  return o;
}

}  // namespace

TEST(Saturate, Examples) {
  Family a1 = build_A({10, 3, 2, 1});
  EXPECT_EQ(saturate(a1, 2), a1);
  EXPECT_EQ(saturate(Family(8, {}, 3), 2), Family::complete(8, 3));
  Family pm(9, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}, 3);
  Family sat = saturate(pm, 3);
  EXPECT_EQ(matching_number(sat).size, 3);
  EXPECT_TRUE(is_maximal(sat, 3));
  EXPECT_THROW(saturate(pm, 2), Error);
}

TEST(RandomSaturatedStable, Invariants) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 10; ++i) {
    Family f = random_saturated_stable(10, 3, 2, rng);
    EXPECT_TRUE(is_stable(f).stable);
    EXPECT_EQ(matching_number(f).size, 2);
    EXPECT_TRUE(is_maximal(f, 2));
  }
}

TEST(MaxStable, DeskScaleValues) {
  auto r10 = max_stable(10, 3, 2);
  EXPECT_EQ(r10.max_size, 64);
  EXPECT_EQ(r10.matched, Construction::A_1);
  auto r9 = max_stable(9, 3, 2);
  EXPECT_EQ(r9.max_size, 56);
  EXPECT_EQ(r9.matched, Construction::A_k);
  EXPECT_EQ(max_stable(7, 2, 2).max_size, 11);
}

TEST(MaxStable, WitnessInvariants) {
  for (auto [n, k, s] : {std::tuple{10, 3, 2}, std::tuple{9, 3, 2}, std::tuple{8, 2, 3}, std::tuple{11, 3, 2}}) {
    auto r = max_stable(n, k, s);
    EXPECT_EQ(static_cast<std::int64_t>(r.witness.size()), r.max_size);
    EXPECT_EQ(matching_number(r.witness).size, s);
    EXPECT_TRUE(is_stable(r.witness).stable);
    EXPECT_GE(r.max_size, size_A({n, k, s, 1}));
    EXPECT_GE(r.max_size, size_A({n, k, s, k}));
    if (n >= k * (s + 1)) EXPECT_LE(r.max_size, general_upper_bound(n, k, s));
  }
}

TEST(MaxStable, NaiveOracleAgreement) {
  for (int s = 1; s <= 2; ++s) {
    for (int n = 2 * s + 1; n <= 6; ++n) EXPECT_EQ(max_stable(n, 2, s).max_size, naive_max(n, 2, s)) << n << " " << s;
  }
}

TEST(MaxStable, GraphCaseIsErdosGallai) {
  // m(n,2,s) = max{C(2s+1,2), C(n,2) - C(n-s,2)}.
  for (int s = 1; s <= 3; ++s) {
    for (int n = 2 * s + 1; n <= 10; ++n) {
      std::int64_t want = std::max<std::int64_t>(binomial(2 * s + 1, 2), binomial(n, 2) - binomial(n - s, 2));
      EXPECT_EQ(max_stable(n, 2, s).max_size, want) << n << " " << s;
    }
  }
}

TEST(MaxStable, VertexRemovalRecursion) {
  // Adding the full star at vertex 1 to an extremal family on [2,n] gives
  // m(n,k,s) >= m(n-1,k,s-1) + C(n-1,k-1).
  for (int n = 9; n <= 11; ++n) {
    EXPECT_GE(max_stable(n, 3, 2).max_size, max_stable(n - 1, 3, 1).max_size + binomial(n - 1, 2));
  }
  for (int n = 8; n <= 10; ++n) {
    EXPECT_GE(max_stable(n, 2, 3).max_size, max_stable(n - 1, 2, 2).max_size + binomial(n - 1, 1));
  }
  // The reverse inequality fails below the pivotal number: 56 > 21 + 28.
  EXPECT_EQ(max_stable(9, 3, 2).max_size, 56);
  EXPECT_EQ(max_stable(8, 3, 1).max_size + binomial(8, 2), 49);
}

TEST(MaxStable, ScheduleIndependent) {
  auto base = max_stable(10, 3, 2, threads(1));
  for (int t : {2, 3, 4}) {
    for (int depth : {0, 3, 12}) {
      SearchOptions o = threads(t);
      o.split_depth = depth;
      auto r = max_stable(10, 3, 2, o);
      EXPECT_EQ(r.max_size, base.max_size);
      EXPECT_EQ(r.witness_trace, base.witness_trace);
      EXPECT_EQ(r.witness, base.witness);
    }
  }
}

TEST(MaxStable, AvoidOneMode) {
  SearchOptions o;
  o.avoid_one = true;
  auto r = max_stable(10, 3, 2, o);
  EXPECT_LE(r.max_size, max_stable(10, 3, 2).max_size);
  EXPECT_EQ(matching_number(r.witness.avoiding(1)).size, 2);
  for (VertexSet h : r.witness_trace) EXPECT_GE(h.cardinality(), 2);
}

TEST(MaxStable, Guard) {
  try {
    max_stable(13, 3, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "beyond desk scale");
  }
  SearchOptions o;
  o.allow_large = true;
  EXPECT_THROW(max_stable(13, 3, 3, o), Error);
  EXPECT_THROW(max_stable(12, 4, 2), Error);
  EXPECT_THROW(max_stable(7, 3, 2), Error);
}

TEST(MaxStable, CheckpointResume) {
  auto path = std::filesystem::temp_directory_path() / "matchlab_test.ckpt";
  std::filesystem::remove(path);
  SearchOptions o;
  o.checkpoint = path;
  o.split_depth = 4;
  auto first = max_stable(10, 3, 2, o);
  ASSERT_TRUE(std::filesystem::exists(path));
  auto resumed = max_stable(10, 3, 2, o);
  EXPECT_EQ(first.max_size, resumed.max_size);
  EXPECT_EQ(first.witness_trace, resumed.witness_trace);
  // Parameters are pinned in the header.
  o.split_depth = 5;
  EXPECT_THROW(max_stable(10, 3, 2, o), Error);
  std::filesystem::remove(path);
}

TEST(MaxStable, OptInSThree) {
  auto path = std::filesystem::temp_directory_path() / "matchlab_s3.ckpt";
  for (int n : {12, 13, 14}) {
    std::filesystem::remove(path);
    SearchOptions o;
    o.allow_large = true;
    o.checkpoint = path;
    auto r = max_stable(n, 3, 3, o);
    EXPECT_EQ(r.max_size, std::max<std::int64_t>(binomial(11, 3), binomial(n, 3) - binomial(n - 3, 3))) << n;
    EXPECT_EQ(matching_number(r.witness).size, 3);
  }
  std::filesystem::remove(path);
}

TEST(NaiveMax, Examples) {
  EXPECT_EQ(naive_max(5, 2, 1), 4);
  EXPECT_EQ(naive_max(6, 2, 1), 5);
  EXPECT_EQ(naive_max(4, 2, 1), 3);
  EXPECT_THROW(naive_max(7, 2, 1), Error);
}
