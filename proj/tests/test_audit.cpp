#include <gtest/gtest.h>

#include <set>

#include "matchlab/audit.hpp"
#include "matchlab/error.hpp"
#include "matchlab/extremal.hpp"

using namespace matchlab;

namespace {

const InequalityRecord& find(const std::vector<InequalityRecord>& rs, const std::string& id, int s,
                             std::optional<int> g2 = std::nullopt) {
  for (const auto& r : rs) {
    if (r.id == id && r.s == s && r.g2 == g2) return r;
  }
  throw std::runtime_error("missing record " + id);
}

}  // namespace

TEST(Dominance, Examples) {
  EXPECT_TRUE(check_dominance(3, 3, 13));
  EXPECT_LE(size_A({13, 3, 3, 2}), 166);
  EXPECT_TRUE(check_dominance(3, 2, 10));
  EXPECT_EQ(size_A({10, 3, 2, 2}), 60);
}

TEST(Fort, Examples) {
  EXPECT_TRUE(check_fort(10, 3, 2).holds);
  EXPECT_TRUE(check_fort(13, 3, 3).holds);
  auto r = check_fort(12, 3, 3);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.margin, r.rhs - r.lhs);
  for (int k = 2; k <= 4; ++k) {
    for (int s = 2; s <= 12; ++s) {
      for (const auto& d : fort_details(k, s)) EXPECT_TRUE(d.agrees()) << d.id << " k=" << k << " s=" << s;
    }
  }
  EXPECT_THROW(check_fort(9, 3, 3), Error);
}

TEST(Catalog, StatedPoints) {
  auto rs = audit_catalog(3, 6, PivotMode::N0);
  EXPECT_EQ(find(rs, "sfat.q2.high.second", 4).margin, 0);
  const auto& q3 = find(rs, "sfat.q3", 3);
  EXPECT_EQ(q3.lhs, 9);
  EXPECT_EQ(q3.rhs, 10);
  const auto& designed = find(rs, "sfat.q2.low.s3_pivot", 3);
  EXPECT_EQ(designed.lhs, 15);
  EXPECT_EQ(designed.rhs, 10);
  EXPECT_FALSE(designed.holds);
  EXPECT_TRUE(designed.agrees());
  // Exact floors give 13 rather than the displayed 15; still a failure.
  EXPECT_EQ(find(rs, "sfat.q2.low.s3_pivot.exact", 3).lhs, 13);
  EXPECT_EQ(find(rs, "sfat.q1.s4_left", 4).lhs, Rational(27, 2));
  // The right side displayed as 10 evaluates to 11.
  EXPECT_EQ(find(rs, "sfat.q1.s4_right_as_printed", 4).lhs, 11);
  EXPECT_EQ(find(rs, "induction.a1_15", 4).lhs, 235);
  EXPECT_EQ(find(rs, "induction.a1_15.split", 4).rhs, 235);
  EXPECT_EQ(find(rs, "lowa.g2_le2", 4).margin, 0);
  EXPECT_EQ(find(rs, "sfat.q1.g2_8", 4).margin, 0);
}

TEST(Catalog, EveryRecordAgrees) {
  for (PivotMode m : {PivotMode::N0, PivotMode::N0Minus1}) {
    for (const auto& r : audit_catalog(3, 120, m)) {
      EXPECT_TRUE(r.agrees()) << r.id << " s=" << r.s << " " << to_string(m);
      EXPECT_EQ(r.margin, r.rhs - r.lhs);
      EXPECT_EQ(r.holds, r.margin >= 0);
      if (r.expected == Expectation::HoldsWithEquality) EXPECT_EQ(r.margin, 0);
    }
  }
}

TEST(Catalog, OrderedAndDeterministic) {
  auto a = audit_catalog(3, 20, PivotMode::N0);
  auto b = audit_catalog(3, 20, PivotMode::N0);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].id, b[i].id);
    EXPECT_EQ(a[i].lhs, b[i].lhs);
    if (i) EXPECT_LE(std::tie(a[i - 1].id, a[i - 1].s), std::tie(a[i].id, a[i].s));
  }
  EXPECT_THROW(audit_catalog(2, 5, PivotMode::N0), Error);
  EXPECT_THROW(audit_catalog(3, 20000, PivotMode::N0), Error);
}

TEST(Catalog, MonotonicityFindings) {
  // Only the rewritten not-sufficiently-fat form with g2 in {0,1} loses
  // monotonicity: its numerator 2 g2 - 3 is negative there.
  auto rs = audit_catalog(3, 200, PivotMode::N0);
  std::set<std::pair<std::string, int>> seen;
  for (const auto& v : check_monotonicity(rs)) seen.insert({v.id, v.g2.value_or(-1)});
  std::set<std::pair<std::string, int>> want{{"nsf.rewritten", 0}, {"nsf.rewritten", 1}};
  EXPECT_EQ(seen, want);
}

TEST(PivotalBounds, Examples) {
  EXPECT_EQ(pivotal(3, 3), 13);
  EXPECT_LE(2 * 13, 7 * 3 + 6);
  EXPECT_EQ(pivotal(4, 3), 17);
  EXPECT_LE(2 * 17, 7 * 4 + 6);
  auto rep = check_pivotal_bounds(200, 3);
  EXPECT_TRUE(rep.bound_failures.empty());
  // n0(s,3) < 4s fails for the first six s; recorded, not hidden.
  EXPECT_EQ(rep.strict_failures, (std::vector<int>{1, 2, 3, 4, 5, 6}));
  EXPECT_FALSE(rep.holds);
  EXPECT_THROW(check_pivotal_bounds(10, 6), Error);
}
