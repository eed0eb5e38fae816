#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "biharm/tensor_map.hpp"

using namespace biharm;

namespace {

struct FrozenTerm {
  int m;
  int ell;
  int flat;
  const char* q;
  long radicand;
  std::vector<int> exps;
};

const std::vector<FrozenTerm> kFrozen = {
#include "data/u_expansion.inc"
};

Monomial monomial_of(const std::vector<int>& exps) {
  Monomial mono;
  for (std::size_t v = 0; v < exps.size(); ++v)
    if (exps[v] > 0) mono = mono.times_var(static_cast<int>(v), exps[v]);
  return mono;
}

RationalPoly sphere_power(int m, int k) { return pow(RationalPoly::norm_squared(m), k); }

}  // namespace

TEST(Monomial, MultiplyAndDegree) {
  Monomial a = Monomial::variable(0, 2);
  Monomial b = Monomial::variable(2).times_var(0, 1);
  Monomial c = a * b;
  EXPECT_EQ(c.degree(), 4);
  EXPECT_EQ(c.exponent(0), 3);
  EXPECT_EQ(c.exponent(1), 0);
  EXPECT_EQ(c.exponent(2), 1);
  EXPECT_THROW(Monomial::variable(1).times_var(1, -2), std::logic_error);
}

TEST(PolyY, NoZeroCoefficientsStored) {
  RationalPoly p = RationalPoly::variable(3, 0);
  p -= RationalPoly::variable(3, 0);
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.size(), 0u);
}

TEST(PolyY, DiffAndHomogenize) {
  const int m = 3;
  RationalPoly p = RationalPoly::variable(m, 0) * RationalPoly::variable(m, 0) * Rational(3);
  EXPECT_EQ(p.diff(0), RationalPoly::variable(m, 0) * Rational(6));
  RationalPoly mixed = p + RationalPoly::constant(m, 1);
  RationalPoly h = homogenize(mixed, 2);
  EXPECT_EQ(h, p + RationalPoly::norm_squared(m));
  EXPECT_THROW(homogenize(mixed + RationalPoly::variable(m, 1), 2), std::logic_error);
}

TEST(PolyY, EqualModSphereExamples) {
  const int m = 4;
  RationalPoly y1 = RationalPoly::variable(m, 0);
  EXPECT_TRUE(poly_equal_mod_sphere(y1 * y1, y1 * y1));
  EXPECT_TRUE(poly_equal_mod_sphere(RationalPoly::constant(m, 1), RationalPoly::norm_squared(m)));
  EXPECT_TRUE(poly_equal_mod_sphere(y1, y1 * RationalPoly::norm_squared(m)));
  EXPECT_FALSE(poly_equal_mod_sphere(y1, y1 * y1));
  EXPECT_FALSE(poly_equal_mod_sphere(RationalPoly::constant(m, 2), RationalPoly::norm_squared(m)));
}

TEST(PolyY, ReduceModSphereAgreesWithHomogenization) {
  const int m = 3;
  RationalPoly y3 = RationalPoly::variable(m, 2);
  RationalPoly p = pow(y3, 4) + RationalPoly::variable(m, 0) * y3 * y3 * Rational(5, 2);
  RationalPoly r = reduce_mod_sphere(p);
  EXPECT_TRUE(poly_equal_mod_sphere(p, r));
  for (const auto& [mono, c] : r.terms()) EXPECT_LT(mono.exponent(2), 2);
}

TEST(BuildU, BaseCaseIsRadialProjection) {
  for (int m = 2; m <= 7; ++m) {
    TensorMap u = build_u(m, 1);
    ASSERT_EQ(u.size(), static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      EXPECT_EQ(u[i].poly, RationalPoly::variable(m, i));
      EXPECT_TRUE(u[i].scale.is_rational());
    }
  }
}

TEST(BuildU, RejectsBadOrder) {
  EXPECT_THROW(build_u(3, 4), std::invalid_argument);
  EXPECT_THROW(build_u(3, 0), std::invalid_argument);
}

TEST(BuildU, TwoByTwoHandUnrolled) {
  TensorMap u = build_u(2, 2);
  const RationalPoly y1 = RationalPoly::variable(2, 0);
  const RationalPoly y2 = RationalPoly::variable(2, 1);
  // (1/sqrt2)(2y1^2 - 1) homogenized, (1/sqrt2) 2 y1 y2 twice, (1/sqrt2)(2y2^2 - 1).
  const SurdScale inv_sqrt2 = SurdScale::sqrt_of(Rational(1, 2));
  EXPECT_EQ(u[0].scale, inv_sqrt2);
  EXPECT_EQ(u[0].poly, y1 * y1 - y2 * y2);
  EXPECT_EQ(u[1].poly, y1 * y2 * Rational(2));
  EXPECT_EQ(u[2].poly, y1 * y2 * Rational(2));
  EXPECT_EQ(u[3].poly, y2 * y2 - y1 * y1);
  // y = (cos t, sin t): squared norm 1.
  for (double t : {0.1, 0.7, 2.3}) {
    std::vector<double> y = {std::cos(t), std::sin(t)};
    double n2 = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      double v = u[i].scale.value() * u[i].poly.evaluate(y);
      n2 += v * v;
    }
    EXPECT_NEAR(n2, 1.0, 1e-14);
  }
}

TEST(BuildU, MatchesBruteForceExpansion) {
  for (auto [m, ell] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{3, 3}}) {
    TensorMap u = build_u(m, ell);
    std::vector<RationalPoly> expect(u.size(), RationalPoly(m));
    std::vector<long> radicand(u.size(), 1);
    for (const auto& t : kFrozen) {
      if (t.m != m || t.ell != ell) continue;
      expect[t.flat].add_term(monomial_of(t.exps), Rational(t.q));
      radicand[t.flat] = t.radicand;
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
      SCOPED_TRACE(std::to_string(m) + "," + std::to_string(ell) + " component " + std::to_string(i));
      EXPECT_EQ(u[i].scale.radicand(), radicand[i]);
      EXPECT_EQ(u[i].poly * u[i].scale.rational(), expect[i]);
    }
  }
}

TEST(BuildU, UnitNormAndHomogeneity) {
  for (int m = 2; m <= 6; ++m) {
    for (int ell = 1; ell <= std::min(m, 3); ++ell) {
      SCOPED_TRACE(std::to_string(m) + "," + std::to_string(ell));
      TensorMap u = build_u(m, ell);
      EXPECT_EQ(u.size(), static_cast<std::size_t>(std::pow(m, ell)));
      EXPECT_EQ(norm_squared_poly(u), sphere_power(m, ell));
      for (const auto& c : u.components()) EXPECT_EQ(c.poly.homogeneous_part(ell), c.poly);
    }
  }
}

TEST(BuildU, NormSquaredExamples) {
  EXPECT_EQ(norm_squared_poly(build_u(4, 1)), RationalPoly::norm_squared(4));
  EXPECT_EQ(norm_squared_poly(build_u(2, 2)), sphere_power(2, 2));
  EXPECT_EQ(norm_squared_poly(build_u(5, 2)), sphere_power(5, 2));
}

TEST(BuildU, FirstIndexPlacementFailsUnitNorm) {
  for (auto [m, ell] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{3, 3}, std::pair{5, 2}}) {
    TensorMap first = build_u(m, ell, RecursionIndex::First);
    EXPECT_FALSE(poly_equal_mod_sphere(norm_squared_poly(first), sphere_power(m, ell)));
  }
}

TEST(BuildU, Deterministic) {
  TensorMap a = build_u(4, 3);
  TensorMap b = build_u(4, 3);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].poly, b[i].poly);
    EXPECT_EQ(a[i].scale, b[i].scale);
  }
}
