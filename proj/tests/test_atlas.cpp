#include <gtest/gtest.h>

#include <set>

#include "biharm/atlas.hpp"

using namespace biharm;

TEST(Classify, Examples) {
  const auto a = classify(5, 1);
  EXPECT_EQ(*a.sin2alpha, Rational(3, 4));
  EXPECT_EQ(a.quadratic_margin, -47);
  EXPECT_EQ(a.verdict.kind, VerdictKind::ProperKnownUnstable);
  EXPECT_EQ(a.verdict.source, VerdictSource::LiteratureRange);

  const auto b = classify(7, 1);
  EXPECT_FALSE(b.sin2alpha);
  EXPECT_EQ(b.verdict.kind, VerdictKind::NoProperSolution);
  EXPECT_EQ(b.verdict.source, VerdictSource::Membership);

  // positive margin, but sin^2 alpha = 45/32 > 1: no proper map to be stable
  const auto c = classify(33, 1);
  EXPECT_EQ(c.quadratic_margin, 9);
  EXPECT_FALSE(c.sin2alpha);
  EXPECT_EQ(c.verdict.kind, VerdictKind::NoProperSolution);

  const auto d = classify(46, 2);
  EXPECT_GT(d.quadratic_margin, 0);
  EXPECT_EQ(d.verdict.kind, VerdictKind::ProperStrictlyStable);
  EXPECT_EQ(d.verdict.source, VerdictSource::Threshold);

  EXPECT_EQ(classify(20, 2).verdict.kind, VerdictKind::ProperUndetermined);
  EXPECT_EQ(classify(12, 2).verdict.kind, VerdictKind::ProperKnownUnstable);
  EXPECT_EQ(classify(18, 3).verdict.kind, VerdictKind::ProperKnownUnstable);
  EXPECT_EQ(classify(19, 3).verdict.kind, VerdictKind::ProperUndetermined);
  EXPECT_EQ(classify(4, 2).verdict.kind, VerdictKind::NoProperSolution);
}

TEST(Classify, Errors) {
  EXPECT_THROW(classify(3, 4), std::invalid_argument);
  EXPECT_THROW(classify(1, 1), std::invalid_argument);
  EXPECT_THROW(classify(5, 0), std::invalid_argument);
}

TEST(Classify, StrictlyStableInvariant) {
  for (const auto& c : atlas(80, 8)) {
    const bool stable = c.verdict.kind == VerdictKind::ProperStrictlyStable;
    EXPECT_EQ(stable, c.sin2alpha.has_value() && c.quadratic_margin > 0 && c.ell <= c.m) << c.m << "," << c.ell;
    if (c.sin2alpha) {
      EXPECT_GE(c.m, 5);
      EXPECT_GT(*c.sin2alpha, 0);
      EXPECT_LT(*c.sin2alpha, 1);
    }
    if (c.ell >= 2 && c.m >= 5) EXPECT_TRUE(c.sin2alpha.has_value()) << c.m << "," << c.ell;
  }
}

TEST(Threshold, Examples) {
  EXPECT_EQ(threshold(1), 33);
  EXPECT_EQ(threshold(2), 46);
  EXPECT_EQ(threshold(3), 59);
}

TEST(Threshold, RootEquivalence) {
  for (int ell = 1; ell <= 10; ++ell) {
    EXPECT_EQ(threshold(ell), margin_threshold(ell)) << ell;
    EXPECT_LE(quadratic_margin(threshold(ell) - 1, ell), 0);
    EXPECT_GT(threshold(ell), ell);
  }
}

TEST(Atlas, SmallTables) {
  const auto t = atlas(6, 1);
  ASSERT_EQ(t.size(), 5u);
  for (const auto& c : t) {
    EXPECT_EQ(c.ell, 1);
    const bool unstable = c.m == 5 || c.m == 6;
    EXPECT_EQ(c.verdict.kind, unstable ? VerdictKind::ProperKnownUnstable : VerdictKind::NoProperSolution);
  }
  const auto tri = atlas(5, 5);
  EXPECT_EQ(tri.size(), 1u + 2 + 3 + 4 + 4);
  for (const auto& c : tri) EXPECT_NE(c.verdict.kind, VerdictKind::ProperStrictlyStable);
  // m-major order
  for (std::size_t i = 1; i < tri.size(); ++i)
    EXPECT_TRUE(tri[i - 1].m < tri[i].m || (tri[i - 1].m == tri[i].m && tri[i - 1].ell < tri[i].ell));
}

TEST(Atlas, StableCellsUpToSixty) {
  std::set<std::pair<int, int>> stable;
  for (const auto& c : atlas(60, 3))
    if (c.verdict.kind == VerdictKind::ProperStrictlyStable) stable.insert({c.m, c.ell});
  std::set<std::pair<int, int>> expected;
  for (int m = 46; m <= 60; ++m) expected.insert({m, 2});
  for (int m = 59; m <= 60; ++m) expected.insert({m, 3});
  EXPECT_EQ(stable, expected);
}

TEST(Atlas, Deterministic) {
  const auto a = atlas(30, 4), b = atlas(30, 4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].quadratic_margin, b[i].quadratic_margin);
    EXPECT_EQ(a[i].verdict.kind, b[i].verdict.kind);
  }
}
