#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "biharm/deformed_map.hpp"
#include "biharm/fields.hpp"
#include "biharm/integrate.hpp"
#include "biharm/quadrature.hpp"

namespace biharm {

/// Thrown when a variation is not tangent to the map.
class NonTangentField : public std::invalid_argument {
 public:
  explicit NonTangentField(double violation);
  double violation() const { return violation_; }

 private:
  double violation_;
};

struct HessianReport {
  double sphere_form = 0;
  double sphere_form_se = 0;  // Monte Carlo only
  double jiang_form = 0;
  double fd_second_difference = 0;
  double fd_error = 0;
  double sufficient_form = 0;
  /// lap_eta, grad4_eta, bilap_eta, gradgrad_eta, cross
  std::map<std::string, double> margin_terms;
  std::string quadrature;
};

/// Names of the five signed sphere-form terms, in kernel order.
const std::array<std::string, 5>& sphere_term_names();

HessianReport hessian_sphere_form(const DeformedMap& u, const TestField& eta, const QuadratureSpec& spec,
                                  AngularMode mode = AngularMode::Auto);

double hessian_jiang_form(const DeformedMap& u, const TestField& eta, const QuadratureSpec& spec,
                          AngularMode mode = AngularMode::Auto);

/// Monte Carlo estimate of sphere form minus Jiang form on shared samples.
McEstimate sphere_minus_jiang_mc(const DeformedMap& u, const TestField& eta, const QuadratureSpec& spec);

double p_energy_hessian(const DeformedMap& u, const TestField& eta, double p, const QuadratureSpec& spec,
                        AngularMode mode = AngularMode::Auto);

struct FdResult {
  double value = 0;
  double error = 0;
  std::array<double, 3> raw{};  // difference quotients at h, h/2, h/4
};

/// Second difference of E_2 along (u + t eta)/|u + t eta|, Richardson
/// extrapolated over h, h/2, h/4.
FdResult hessian_fd_oracle(const DeformedMap& u, const TestField& eta, double h, const QuadratureSpec& spec);

/// int |Lap eta|^2 + 2|du|^4|eta|^2 - <Lap^2 u, u>|eta|^2 - 6|du|^2|d eta|^2.
double sufficient_condition_value(const DeformedMap& u, const TestField& eta, const QuadratureSpec& spec);

/// int |Lap eta|^2 / int |d eta|^2 / r^2. q is needed only for non-equivariant patterns.
double hardy_ratio(const TestField& eta, const QuadratureSpec& spec, const DeformedMap* q = nullptr);

struct RayleighResult {
  double minimum = 0;
  double condition = 0;
  Eigen::VectorXd spectrum;
  Eigen::VectorXd minimizer;  // spline coefficients
};

/// min over f(r) in the spline family of int |Lap f|^2 / int |f'|^2 / r^2.
RayleighResult hardy_infimum(int m, int basis_size, double inner, const QuadratureSpec& spec);

struct FirstVariationReport {
  double lhs = 0;
  double lhs_error = 0;
  double rhs = 0;
  std::array<double, 4> rhs_terms{};
  double term_scale = 0;
};

/// lhs: central difference of E_2 along the projection variation.
/// rhs: int <tau_2(u), V> with the strong bitension.
FirstVariationReport first_variation_check(const DeformedMap& u, const TestField& v, const QuadratureSpec& spec,
                                           double h = 1e-2);

/// Hessian on colatitude shifts f(r)(cos a u, -sin a) as a 1-D integral,
/// at the critical angle (throws std::domain_error if there is none).
double equivariant_hessian_1d(int m, int ell, const RadialProfile& f, const QuadratureSpec& spec);
/// Same at an arbitrary sin^2(alpha).
double equivariant_hessian_1d(int m, int ell, double sin2alpha, const RadialProfile& f,
                              const QuadratureSpec& spec);

struct NegativeDirection {
  std::optional<RadialProfile> profile;
  RayleighResult rayleigh;
};

/// Smallest eigenvalue of the equivariant Hessian pencil over the spline
/// family, normalized by int |eta|^2 / r^4.
NegativeDirection find_negative_direction(int m, int ell, int basis_size, double inner,
                                          const QuadratureSpec& spec);

/// Rayleigh minimum of int |Lap eta|^2 - 3K int |d eta|^2 / r^2 relative to
/// int |d eta|^2 / r^2 over radial splines; the sufficient form after the
/// density identities, independent of alpha.
RayleighResult sufficient_rayleigh_minimum(int m, int ell, int basis_size, double inner,
                                           const QuadratureSpec& spec);

}  // namespace biharm
