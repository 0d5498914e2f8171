#include <gtest/gtest.h>

#include <filesystem>

#include "matchlab/error.hpp"
#include "matchlab/extremal.hpp"
#include "matchlab/family.hpp"
#include "matchlab/hyp_io.hpp"

using namespace matchlab;

TEST(Family, DeduplicatesAndSorts) {
  Family f(5, {{2, 3, 4}, {1, 2, 3}, {2, 3, 4}});
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f.members()[0], (VertexSet{1, 2, 3}));
  EXPECT_EQ(f.uniform_k(), 3);
  EXPECT_TRUE(f.contains({2, 3, 4}));
  EXPECT_FALSE(f.contains({1, 2, 4}));
}

TEST(Family, Invariants) {
  EXPECT_THROW(Family(3, {{1, 2, 4}}), Error);
  EXPECT_THROW(Family(5, {{1, 2}}, 3), Error);
  EXPECT_FALSE(Family::mixed(5, {{1, 2, 3}}).uniform_k());
  EXPECT_FALSE(Family(5, {{1}, {2, 3}}).uniform_k());
}

TEST(Family, AvoidingAndInside) {
  Family f(6, {{1, 2, 3}, {2, 3, 4}, {4, 5, 6}});
  EXPECT_EQ(f.avoiding(1).size(), 2u);
  EXPECT_EQ(f.inside(VertexSet::interval(1, 4)).size(), 2u);
}

TEST(Stability, Examples) {
  for (int ell = 1; ell <= 3; ++ell) EXPECT_TRUE(is_stable(build_A({10, 3, 2, ell})).stable);
  auto r = is_stable(Family(3, {{2, 3}}));
  ASSERT_FALSE(r.stable);
  ASSERT_TRUE(r.counterexample);
  EXPECT_EQ(r.counterexample->first, (VertexSet{1, 3}));
  EXPECT_EQ(r.counterexample->second, (VertexSet{2, 3}));
  EXPECT_TRUE(is_stable(Family::complete(7, 3)).stable);
  EXPECT_TRUE(is_stable(Family(4, {})).stable);
}

TEST(Stability, MatchesFullDefinition) {
  // Compare the predecessor test against checking every dominated set.
  auto all = subsets_of_size(VertexSet::interval(1, 6), 2);
  for (std::uint32_t mask = 0; mask < (1u << all.size()); mask += 37) {
    std::vector<VertexSet> m;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (mask >> i & 1u) m.push_back(all[i]);
    }
    Family f(6, m, 2);
    bool full = true;
    for (VertexSet x : f) {
      for (VertexSet g : all) {
        if (dominates(g, x) && !f.contains(g)) full = false;
      }
    }
    EXPECT_EQ(is_stable(f).stable, full);
  }
}

TEST(HypFormat, RoundTrip) {
  Family f(6, {{1, 2, 3}, {2, 4, 6}});
  std::string text = format_hyp(f);
  EXPECT_EQ(text, "6\n1 2 3\n2 4 6\n");
  EXPECT_EQ(parse_hyp(text), f);
  EXPECT_EQ(parse_hyp("# comment\n6\n\n2 4 6\n1 2 3\n"), f);
  auto path = std::filesystem::temp_directory_path() / "matchlab_roundtrip.hyp";
  write_hyp(path, f);
  EXPECT_EQ(read_hyp(path), f);
  std::filesystem::remove(path);
}

TEST(HypFormat, Rejects) {
  EXPECT_THROW(parse_hyp(""), Error);
  EXPECT_THROW(parse_hyp("3\n1 4\n"), Error);
  EXPECT_THROW(parse_hyp("3\n2 1\n"), Error);
  EXPECT_THROW(parse_hyp("3\n1 x\n"), Error);
}
