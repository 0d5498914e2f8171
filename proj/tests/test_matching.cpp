#include <gtest/gtest.h>

#include <random>

#include "matchlab/extremal.hpp"
#include "matchlab/matching.hpp"
#include "oracle.hpp"

using namespace matchlab;

namespace {

std::vector<oracle::Set> lists(const Family& f) {
  std::vector<oracle::Set> out;
  for (VertexSet v : f) out.push_back(v.elements());
  return out;
}

Family random_family(std::mt19937& rng, int n, int k, int edges) {
  auto all = subsets_of_size(VertexSet::interval(1, n), k);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min<std::size_t>(all.size(), edges));
  return Family(n, all, k);
}

}  // namespace

TEST(Matching, Examples) {
  EXPECT_EQ(matching_number(Family(5, {}, 3)).size, 0);
  EXPECT_TRUE(matching_number(Family(5, {}, 3)).witness.edges.empty());
  EXPECT_EQ(matching_number(Family(5, {{1, 2, 3}})).size, 1);
  EXPECT_EQ(matching_number(build_A({12, 3, 3, 2})).size, 3);
}

TEST(Matching, WitnessIsLeastMaximumMatching) {
  Family f(6, {{1, 2}, {3, 4}, {1, 3}, {2, 4}, {5, 6}});
  auto r = matching_number(f);
  ASSERT_EQ(r.size, 3);
  EXPECT_EQ(r.witness.edges, (std::vector<VertexSet>{{1, 2}, {3, 4}, {5, 6}}));
}

TEST(Matching, AgreesWithOracle) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    int k = 1 + trial % 3;
    int n = std::max(k, 3 + trial % 6);
    Family f = random_family(rng, n, k, 1 + trial % 12);
    auto r = matching_number(f);
    ASSERT_EQ(r.size, oracle::matching_number(lists(f)));
    // Witness: correct size, members, pairwise disjoint.
    ASSERT_EQ(static_cast<int>(r.witness.edges.size()), r.size);
    for (std::size_t i = 0; i < r.witness.edges.size(); ++i) {
      EXPECT_TRUE(f.contains(r.witness.edges[i]));
      for (std::size_t j = i + 1; j < r.witness.edges.size(); ++j) {
        EXPECT_FALSE(r.witness.edges[i].intersects(r.witness.edges[j]));
      }
    }
    EXPECT_LE(r.size, n / k);
  }
}

TEST(Matching, MonotoneAndSubadditive) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Family f = random_family(rng, 8, 3, 10);
    Family g = random_family(rng, 8, 3, 6);
    int nf = matching_number(f).size;
    auto all = subsets_of_size(VertexSet::interval(1, 8), 3);
    VertexSet x = all[trial % all.size()];
    int nx = matching_number(f.with(x)).size;
    EXPECT_GE(nx, nf);
    EXPECT_LE(nx, nf + 1);
    std::vector<VertexSet> both = f.members();
    both.insert(both.end(), g.begin(), g.end());
    EXPECT_LE(matching_number(Family(8, both, 3)).size, nf + matching_number(g).size);
  }
}

TEST(Matching, CapStopsEarly) {
  Family f = Family::complete(9, 3);
  EXPECT_EQ(max_matching(f.members()), 3);
  EXPECT_EQ(max_matching(f.members(), 2), 2);
  EXPECT_TRUE(has_matching(f.members(), 3));
  EXPECT_FALSE(has_matching(f.members(), 4));
}

TEST(Maximality, Constructions) {
  for (int ell = 1; ell <= 3; ++ell) EXPECT_TRUE(is_maximal(build_A({10, 3, 2, ell}), 2));
  Family partial(8, {{1, 2, 3}}, 3);
  EXPECT_FALSE(is_maximal(partial, 2));
}
