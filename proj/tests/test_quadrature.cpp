#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "biharm/quadrature.hpp"

using namespace biharm;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(SphereVolume, Examples) {
  EXPECT_NEAR(sphere_volume(2), 2 * kPi, 1e-14);
  EXPECT_NEAR(sphere_volume(3), 4 * kPi, 1e-14);
  EXPECT_NEAR(sphere_volume(5), 8 * kPi * kPi / 3, 1e-13);
}

TEST(GaussRules, LegendreIntegratesPolynomials) {
  Rule1D gl = gauss_legendre(10);
  for (int d = 0; d <= 19; ++d) {
    double s = 0;
    for (int i = 0; i < 10; ++i) s += gl.weights[i] * std::pow(gl.nodes[i], d);
    const double exact = d % 2 ? 0.0 : 2.0 / (d + 1);
    EXPECT_NEAR(s, exact, 1e-14) << d;
  }
}

TEST(GaussRules, GegenbauerMoments) {
  // int (1-t^2)^a t^2 dt = B(3/2, a+1)
  for (double a : {0.5, 1.0, 1.5, 2.0}) {
    Rule1D g = gauss_gegenbauer(4, a);
    double s0 = 0, s2 = 0;
    for (int i = 0; i < 4; ++i) {
      s0 += g.weights[i];
      s2 += g.weights[i] * g.nodes[i] * g.nodes[i];
    }
    const double b0 = std::tgamma(0.5) * std::tgamma(a + 1) / std::tgamma(a + 1.5);
    const double b2 = std::tgamma(1.5) * std::tgamma(a + 1) / std::tgamma(a + 2.5);
    EXPECT_NEAR(s0, b0, 1e-14);
    EXPECT_NEAR(s2, b2, 1e-14);
  }
}

TEST(SphereRule, ExactOnMonomials) {
  for (int m : {3, 5, 6}) {
    SphereRule rule = product_sphere_rule(m, 4);
    ASSERT_EQ(rule.exactness, 7);
    EXPECT_NEAR(rule.weights.sum(), sphere_volume(m), 1e-12);
    std::vector<std::vector<int>> alphas = {{2}, {4}, {2, 2}, {2, 4}, {6}, {1, 1}, {3}, {2, 2, 2}, {1, 2, 4}};
    for (auto a : alphas) {
      std::vector<int> alpha(m, 0);
      for (std::size_t i = 0; i < a.size(); ++i) alpha[(i * 2 + 1) % m] += a[i];
      double s = 0;
      for (Eigen::Index p = 0; p < rule.weights.size(); ++p) {
        double v = rule.weights[p];
        for (int i = 0; i < m; ++i) v *= std::pow(rule.points(p, i), alpha[i]);
        s += v;
      }
      EXPECT_NEAR(s, sphere_monomial_integral(alpha), 1e-13 * sphere_volume(m)) << m;
    }
  }
}

TEST(RadialIntegral, Examples) {
  QuadratureSpec spec;
  const double vol5 = sphere_volume(5);
  RadialIntegrand inv2{[](double r) { return 1 / (r * r); }, 2, {}};
  RadialIntegrand inv4{[](double r) { return 1 / std::pow(r, 4); }, 4, {}};
  EXPECT_NEAR(radial_integral(inv2, 5, spec) / (vol5 / 3), 1.0, 1e-10);
  EXPECT_NEAR(radial_integral(inv4, 5, spec) / vol5, 1.0, 1e-10);
  EXPECT_THROW(radial_integral(inv4, 4, spec), DivergentIntegral);
  QuadratureSpec annulus = spec;
  annulus.a = 0.2;
  EXPECT_NO_THROW(radial_integral(inv4, 4, annulus));
}

TEST(RadialIntegral, DivergenceCriterionIsExact) {
  QuadratureSpec spec;
  for (int m = 2; m <= 8; ++m)
    for (int p = 0; p <= 9; ++p) {
      RadialIntegrand h{[p](double r) { return std::pow(r, -p); }, p, {}};
      if (m - p <= 0)
        EXPECT_THROW(radial_integral(h, m, spec), DivergentIntegral);
      else
        EXPECT_NEAR(radial_integral(h, m, spec), sphere_volume(m) / (m - p), 1e-10 * sphere_volume(m));
    }
}

TEST(RadialIntegral, SplitInvariance) {
  RadialIntegrand h{[](double r) { return std::exp(-r) / (r * r); }, 2, {}};
  QuadratureSpec ab, ac, cb;
  ac.b = 0.37;
  cb.a = 0.37;
  const double whole = radial_integral(h, 5, ab);
  const double parts = radial_integral(h, 5, ac) + radial_integral(h, 5, cb);
  EXPECT_NEAR(whole, parts, 1e-12 * std::abs(whole));
}

TEST(MonteCarlo, BallVolume) {
  QuadratureSpec spec;
  spec.mc_samples = 100000;
  McEstimate one = ball_integral_mc([](std::span<const double>) { return 1.0; }, 5, spec);
  EXPECT_NEAR(one.estimate, 8 * kPi * kPi / 15, 1e-12);
  McEstimate zero = ball_integral_mc([](std::span<const double>) { return 0.0; }, 5, spec);
  EXPECT_EQ(zero.estimate, 0.0);
}

TEST(MonteCarlo, AgreesWithRadialQuadrature) {
  QuadratureSpec spec;
  spec.a = 0.05;
  spec.b = 0.95;
  spec.mc_samples = 200000;
  auto f = [](std::span<const double> x) {
    double r2 = 0;
    for (double v : x) r2 += v * v;
    return 1 / r2;
  };
  McEstimate mc = ball_integral_mc(f, 5, spec);
  RadialIntegrand h{[](double r) { return 1 / (r * r); }, 2, {}};
  EXPECT_LT(std::abs(mc.estimate - radial_integral(h, 5, spec)), 3 * mc.standard_error);
}

TEST(MonteCarlo, DeterministicForSeed) {
  QuadratureSpec spec;
  spec.mc_samples = 20000;
  auto f = [](std::span<const double> x) { return x[0] * x[0] + x[1]; };
  McEstimate a = ball_integral_mc(f, 4, spec);
  McEstimate b = ball_integral_mc(f, 4, spec);
  EXPECT_EQ(a.estimate, b.estimate);
  spec.rng_seed = 43;
  EXPECT_NE(ball_integral_mc(f, 4, spec).estimate, a.estimate);
}
