#include <gtest/gtest.h>

#include "matchlab/error.hpp"
#include "matchlab/extremal.hpp"
#include "matchlab/matching.hpp"
#include "oracle.hpp"

using namespace matchlab;

TEST(BuildA, SizeMatchesEnumerationOracle) {
  for (int k = 2; k <= 3; ++k) {
    for (int s = 1; s <= 3; ++s) {
      for (int n = k * s; n <= 13; ++n) {
        for (int ell = 1; ell <= k; ++ell) {
          ExtremalSpec sp{n, k, s, ell};
          std::int64_t want = oracle::size_A(n, k, s, ell);
          EXPECT_EQ(size_A(sp), want) << n << " " << k << " " << s << " " << ell;
          EXPECT_EQ(static_cast<std::int64_t>(build_A(sp).size()), want);
        }
      }
    }
  }
}

TEST(BuildA, MatchingNumberAndStability) {
  for (int k = 2; k <= 3; ++k) {
    for (int s = 1; s <= 3; ++s) {
      for (int n = k * s; n <= 13; ++n) {
        for (int ell = 1; ell <= k; ++ell) {
          Family f = build_A({n, k, s, ell});
          EXPECT_EQ(matching_number(f).size, s);
          EXPECT_TRUE(is_stable(f).stable);
        }
      }
    }
  }
}

TEST(BuildA, KnownSizes) {
  EXPECT_EQ(size_A({10, 3, 2, 1}), 64);
  EXPECT_EQ(size_A({10, 3, 2, 3}), 56);
  EXPECT_EQ(size_A({10, 3, 2, 2}), 60);
  EXPECT_EQ(size_A({13, 3, 3, 1}), 166);
  EXPECT_EQ(size_A({13, 3, 3, 3}), 165);
  EXPECT_THROW(size_A({10, 3, 2, 4}), Error);
  EXPECT_THROW(size_A({5, 3, 2, 1}), Error);
}

TEST(Pivotal, Values) {
  EXPECT_EQ(pivotal(3, 3), 13);
  EXPECT_EQ(pivotal(4, 3), 17);
  EXPECT_EQ(pivotal(2, 3), 10);
  // Definition checked directly.
  for (int k = 2; k <= 4; ++k) {
    for (int s = 1; s <= 30; ++s) {
      int n0 = pivotal(s, k);
      EXPECT_LE(size_A({n0, k, s, k}), size_A({n0, k, s, 1}));
      if (n0 > k * s + k - 1) EXPECT_GT(size_A({n0 - 1, k, s, k}), size_A({n0 - 1, k, s, 1}));
    }
  }
}

TEST(ErdosGallai, Formula) {
  EXPECT_EQ(erdos_gallai_max(7, 2), 11);
  EXPECT_EQ(erdos_gallai_max(6, 2), 9);
  EXPECT_EQ(erdos_gallai_max(9, 3), 21);
  try {
    erdos_gallai_max(5, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "formula valid only for n ≥ 3s");
  }
}

TEST(GeneralUpperBound, Values) {
  EXPECT_EQ(general_upper_bound(12, 3, 3), 165);
  EXPECT_EQ(general_upper_bound(10, 3, 2), 72);
  EXPECT_THROW(general_upper_bound(11, 3, 3), Error);
  // At n = k(s+1) the bound is the clique C(k(s+1)-1, k).
  for (int s = 1; s <= 6; ++s) {
    int n = 3 * (s + 1);
    EXPECT_EQ(general_upper_bound(n, 3, s), size_A({n, 3, s, 3}));
    EXPECT_EQ(general_upper_bound(n, 3, s), oracle::choose(n - 1, 3));
  }
}
