#include <gtest/gtest.h>

#include <random>

#include "matchlab/compression.hpp"
#include "matchlab/error.hpp"
#include "matchlab/matching.hpp"

using namespace matchlab;

TEST(Shift, MovesAndCollisions) {
  Family f(4, {{2, 3}, {1, 3}, {2, 4}});
  int moved = 0;
  Family g = shift(f, 1, 2, moved);
  // {2,3} collides with {1,3}; {2,4} moves to {1,4}.
  EXPECT_EQ(moved, 1);
  EXPECT_EQ(g, Family(4, {{2, 3}, {1, 3}, {1, 4}}));
  EXPECT_EQ(shift(Family(3, {{2, 3}}), 1, 2), Family(3, {{1, 3}}));
}

TEST(Shift, Errors) {
  Family f(4, {{1, 2}});
  try {
    shift(f, 3, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "invalid shift direction");
  }
  EXPECT_THROW(shift(f, 2, 2), Error);
  EXPECT_THROW(shift(f, 1, 5), Error);
}

TEST(Stabilize, AlreadyStableIsFixed) {
  Family f = Family::complete(6, 3);
  auto r = stabilize(f);
  EXPECT_EQ(r.family, f);
  EXPECT_TRUE(r.log.steps.empty());
}

TEST(Stabilize, RandomProperties) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    int k = 1 + trial % 3;
    int n = k + 1 + trial % (10 - k);
    auto all = subsets_of_size(VertexSet::interval(1, n), k);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min<std::size_t>(all.size(), 1 + trial % 15));
    Family f(n, all, k);
    auto r = stabilize(f);
    EXPECT_EQ(r.family.size(), f.size());
    EXPECT_TRUE(is_stable(r.family).stable);
    EXPECT_LE(matching_number(r.family).size, matching_number(f).size);
    EXPECT_LT(potential(r.family) - potential(f), r.log.steps.empty() ? 1 : 0);
    // Deterministic.
    EXPECT_EQ(stabilize(f).family, r.family);
    EXPECT_EQ(stabilize(f).log.steps, r.log.steps);
  }
}
