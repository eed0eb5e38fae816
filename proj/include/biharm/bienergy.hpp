#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <utility>

#include "biharm/deformed_map.hpp"
#include "biharm/fields.hpp"
#include "biharm/integrate.hpp"
#include "biharm/quadrature.hpp"

namespace biharm {

/// |dq|^2 = A / r^2, <Lap^2 q, q> = B / r^4, |dq|^4 = C / r^4.
struct QDensities {
  double A = 0;
  double B = 0;
  double C = 0;
};

/// A = s L, B = s L K, C = A^2 for sin^2(alpha) = s.
QDensities q_densities(int m, int ell, double sin2alpha);

struct ExactQDensities {
  Rational A, B, C;
};
ExactQDensities q_densities_exact(int m, int ell, const Rational& sin2alpha);

/// |dq|^2(x) and <Lap^2 q, q>(x) from the compiled calculus pipeline.
std::pair<double, double> q_density_numeric_check(const DeformedMap& q, std::span<const double> x);

struct EnergyReport {
  double dirichlet = 0;       // int |grad q|^2
  double bilaplacian_l2 = 0;  // int |Lap q|^2
  double grad4 = 0;           // int |dq|^4
  double bienergy = 0;        // 1/2 (bilaplacian_l2 - grad4)
  bool membership = false;    // q in W^{2,2}
  Rational sin2alpha;
};

/// Closed-form densities integrated by 1-D quadrature over the annulus (spec.a, spec.b).
/// Uses the angle-equation value of sin^2(alpha) even when m <= 4, so that
/// the divergence for m <= 4 surfaces as DivergentIntegral on the full ball.
EnergyReport sobolev_report(int m, int ell, const QuadratureSpec& spec);

struct ResidualReport {
  double value = 0;
  std::array<double, 3> terms{};
  double largest_term = 0;
};

/// int <Lap q, Lap phi> - 2|dq|^2 <dq, d phi> - (<Lap^2 q, q> - 2|dq|^4)<q, phi>.
/// phi must be supported inside the open annulus (0, 1).
ResidualReport weak_residual(const DeformedMap& q, const TestField& phi, const QuadratureSpec& spec,
                             AngularMode mode = AngularMode::Auto);

/// 1/2 (int |Lap q|^2 - int |dq|^4) through the radial reduction.
double bienergy_value(const DeformedMap& q, const QuadratureSpec& spec);

/// Pointwise (|Lap u|^2, |du|^2) of a sphere map.
using DensitySampler = std::function<std::pair<double, double>(std::span<const double>)>;

/// 1/2 (int |Lap u|^2 - int |du|^4) by Monte Carlo on the annulus (spec.a, spec.b).
McEstimate bienergy_value(const DensitySampler& u, int m, const QuadratureSpec& spec);

/// Monte Carlo counterparts of dirichlet, bilaplacian_l2, grad4 and bienergy
/// on the annulus (spec.a, spec.b), from shared samples.
std::array<McEstimate, 4> sobolev_mc(const DeformedMap& q, const QuadratureSpec& spec);

/// Sampler for q built from its jets.
DensitySampler density_sampler(const DeformedMap& q);

}  // namespace biharm
