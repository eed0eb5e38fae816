#include <gtest/gtest.h>

#include <random>

#include "biharm/calculus.hpp"

using namespace biharm;

namespace {

using RP = RadialPoly<Rational>;

RP y(int m, int i) { return {RationalPoly::variable(m, i), 0}; }

bool same_function(const RP& a, const RP& b) {
  return a.weight == b.weight && poly_equal_mod_sphere(a.poly, b.poly);
}

}  // namespace

TEST(DerivativeRule, Examples) {
  const int m = 4;
  // d_j y_i = -y_i y_j / r for i != j
  RP d = d_j(y(m, 0), 2);
  EXPECT_EQ(d.weight, 1);
  EXPECT_EQ(d.poly, RationalPoly::variable(m, 0) * RationalPoly::variable(m, 2) * Rational(-1));
  // d_i y_i = (1 - y_i^2)/r
  RP di = d_j(y(m, 1), 1);
  EXPECT_TRUE(same_function(di, RP(RationalPoly::constant(m, 1) -
                                       RationalPoly::variable(m, 1) * RationalPoly::variable(m, 1),
                                   1)));
  // d_j r^-2 = -2 y_j / r^3
  RP inv_r2(RationalPoly::constant(m, 1), 2);
  EXPECT_EQ(d_j(inv_r2, 3).poly, RationalPoly::variable(m, 3) * Rational(-2));
  EXPECT_EQ(d_j(inv_r2, 3).weight, 3);
}

TEST(DerivativeRule, MatchesFiniteDifferences) {
  const int m = 5;
  TensorField u = TensorField::from_map(build_u(m, 2));
  std::mt19937_64 gen(7);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> radius(0.2, 0.9);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> x(m);
    double n = 0;
    for (double& v : x) {
      v = normal(gen);
      n += v * v;
    }
    const double r = radius(gen);
    for (double& v : x) v *= r / std::sqrt(n);
    const std::size_t comp = trial % u.size();
    const int j = trial % m;
    RP f = u.component(comp);
    const double exact = d_j(f, j).evaluate(x);
    auto eval = [&](std::span<const double> p) { return f.evaluate(p); };
    const double e3 = std::abs(fd_check(eval, x, j, 1e-3) - exact);
    const double e4 = std::abs(fd_check(eval, x, j, 1e-4) - exact);
    const double scale = std::max(1.0, std::abs(exact));
    EXPECT_LT(e4, 1e-6 * scale);
    if (e3 > 1e-9 * scale) EXPECT_LT(e4, 0.05 * e3);
  }
}

TEST(FdCheck, Examples) {
  const int m = 3;
  auto y1 = [](std::span<const double> p) {
    return p[0] / std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
  };
  std::vector<double> e1 = {1, 0, 0};
  EXPECT_NEAR(fd_check(y1, e1, 1, 1e-5), 0.0, 1e-9);
  std::vector<double> x = {0.6, 0.8, 0};
  EXPECT_NEAR(fd_check(y1, x, 0, 1e-4), d_j(y(m, 0), 0).evaluate(x), 1e-7);
  RP inv_r2(RationalPoly::constant(m, 1), 2);
  auto f = [&](std::span<const double> p) { return inv_r2.evaluate(p); };
  std::vector<double> h = {0.3, 0.4, 0};
  EXPECT_NEAR(fd_check(f, h, 0, 1e-5), -2 * 0.6 / 0.125, 1e-5);
}

TEST(GradDot, EnergyDensity) {
  for (auto [m, ell] : {std::pair{3, 1}, std::pair{6, 1}, std::pair{5, 2}, std::pair{4, 3}}) {
    TensorField u = TensorField::from_map(build_u(m, ell));
    RP g = grad_dot(u, u);
    EXPECT_EQ(g.weight, 2);
    EXPECT_TRUE(poly_equal_mod_sphere(g.poly, RationalPoly::constant(m, ell * (ell + m - 2))));
  }
  TensorField u = TensorField::from_map(build_u(4, 1));
  EXPECT_TRUE(grad_dot(u, TensorField::zero(4, 1)).is_zero());
  EXPECT_THROW(grad_dot(u, TensorField::zero(4, 2)), std::invalid_argument);
}

TEST(EulerContraction, VanishesOnU) {
  EXPECT_TRUE(is_zero_mod_sphere(euler_radial_contraction(TensorField::from_map(build_u(3, 1)))));
  EXPECT_TRUE(is_zero_mod_sphere(euler_radial_contraction(TensorField::from_map(build_u(4, 2)))));
  TensorField c = euler_radial_contraction(TensorField::constant(3, 2, Rational(5)));
  for (std::size_t i = 0; i < c.size(); ++i) EXPECT_TRUE(c.poly(i).is_zero());
}

TEST(Laplacian, ClosedFormCoefficients) {
  EXPECT_EQ(iterated_laplacian_coefficient(5, 1, 1), -4);
  EXPECT_EQ(iterated_laplacian_coefficient(5, 2, 1), -10);
  EXPECT_EQ(iterated_laplacian_coefficient(5, 1, 2), 24);
  EXPECT_EQ(iterated_laplacian_coefficient(5, 2, 2), 120);
}

TEST(Laplacian, IteratedMatchesClosedForm) {
  for (auto [m, ell] : {std::pair{5, 1}, std::pair{5, 2}, std::pair{3, 3}}) {
    TensorField u = TensorField::from_map(build_u(m, ell));
    for (int k = 1; k <= 3; ++k) {
      TensorField lap = iterated_laplacian(u, k);
      TensorField expect = scaled(u, Rational(iterated_laplacian_coefficient(m, ell, k)), 2 * k);
      EXPECT_TRUE(equal_mod_sphere(lap, expect)) << m << "," << ell << " k=" << k;
    }
  }
  TensorField u = TensorField::from_map(build_u(4, 2));
  TensorField once = laplacian(u);
  TensorField it = iterated_laplacian(u, 1);
  for (std::size_t i = 0; i < u.size(); ++i) EXPECT_EQ(once.poly(i), it.poly(i));
  TensorField z = laplacian(TensorField::zero(3, 2));
  EXPECT_TRUE(is_zero_mod_sphere(z));
}

TEST(Laplacian, Harmonicity) {
  for (auto [m, ell] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{4, 2}, std::pair{3, 3}}) {
    TensorField u = TensorField::from_map(build_u(m, ell));
    TensorField residual = add_scaled(laplacian(u), grad_dot(u, u), u);
    EXPECT_TRUE(is_zero_mod_sphere(residual)) << m << "," << ell;
  }
}

TEST(Laplacian, FirstPlacementNotHarmonic) {
  TensorField u = TensorField::from_map(build_u(3, 2, RecursionIndex::First));
  TensorField residual = add_scaled(laplacian(u), grad_dot(u, u), u);
  EXPECT_FALSE(is_zero_mod_sphere(residual));
}

TEST(Laplacian, NumericSpotCheck) {
  const int m = 5;
  TensorField u = TensorField::from_map(build_u(m, 2));
  TensorField lap = laplacian(u);
  std::vector<double> x = {0.1, -0.3, 0.2, 0.25, 0.05};
  auto ux = u.evaluate(x);
  auto lx = lap.evaluate(x);
  double r2 = 0;
  for (double v : x) r2 += v * v;
  for (std::size_t i = 0; i < u.size(); ++i) EXPECT_NEAR(lx[i], -10 * ux[i] / r2, 1e-10 * (1 + std::abs(lx[i])));
}
