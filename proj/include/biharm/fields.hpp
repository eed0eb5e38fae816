#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "biharm/compiled.hpp"
#include "biharm/deformed_map.hpp"

namespace biharm {

/// Radial profile f(r) with two derivatives. f(1) = f'(1) = 0 always.
class RadialProfile {
 public:
  enum class Basis { PolynomialBump, SplineCoefficients, CompactBump };

  RadialProfile() = default;

  /// (1 - r^2)^2 r^s (c_0 + c_1 r + ...). Touches the origin.
  static RadialProfile polynomial_bump(int s, std::vector<double> poly = {1.0});
  /// sum_i c_i B_i(r) over interior cubic B-splines on geometrically graded
  /// knots in [inner, 1]; N coefficients use N + 3 knot intervals, so f, f'
  /// and f'' vanish at both ends.
  static RadialProfile spline(double inner, std::vector<double> coeffs);
  /// amplitude ((r - a)(b - r))^3 / ((b - a)/2)^6 on [a, b], zero outside.
  static RadialProfile compact_bump(double a, double b, double amplitude = 1.0);

  Basis basis() const { return basis_; }
  const std::vector<double>& coefficients() const { return coeffs_; }

  /// (f, f', f'') at r.
  Eigen::Vector3d eval(double r) const;

  double support_lo() const { return lo_; }
  double support_hi() const { return hi_; }
  /// f ~ r^s at the origin when the support touches it, else -1.
  int order_at_zero() const { return lo_ == 0 ? s_ : -1; }
  const std::vector<double>& breakpoints() const { return knots_; }
  bool is_zero() const;

  RadialProfile scaled(double c) const;
  std::string describe() const;

  /// Knots t_0..t_{N+3} of the spline family.
  static std::vector<double> spline_knots(double inner, int n_basis);
  /// (B_i, B_i', B_i'') of one interior cubic B-spline.
  static Eigen::Vector3d bspline(const std::vector<double>& knots, int i, double r);

 private:
  Basis basis_ = Basis::PolynomialBump;
  std::vector<double> coeffs_;
  std::vector<double> knots_;
  int s_ = 0;
  double lo_ = 0, hi_ = 1;
  double amp_ = 1;
};

/// eta and its first two derivatives at one point (d(i, j) = d_j eta_i).
struct FieldJet {
  Eigen::VectorXd v;
  Eigen::MatrixXd d;
  Eigen::VectorXd lap;
};

/// Angular pattern Phi(y) of eta = f(r) Phi(y), Phi of radial weight 0.
/// jets at r = 1: Phi, r d_j Phi, r^2 Lap Phi.
struct AngularJet {
  Eigen::VectorXd phi;
  Eigen::MatrixXd dphi;
  Eigen::VectorXd lapphi;
};

enum class Generator { ColatitudeShift, TangentDerivative, AmbientProjected, RadialScalar };

std::string to_string(Generator g);

/// Variation eta = f(r) Phi(y) with values in R^(m^l + 1).
class TestField {
 public:
  TestField() = default;

  static TestField colatitude_shift(const DeformedMap& q, RadialProfile f);
  /// f(r) r (d_j u, 0).
  static TestField tangent_derivative(const DeformedMap& q, int j, RadialProfile f);
  /// f(r) (w - <w, q> q).
  static TestField ambient_projected(const DeformedMap& q, const Eigen::VectorXd& w, RadialProfile f);
  /// f(r) w with w constant; not tangent to q.
  static TestField radial_scalar(int m, const Eigen::VectorXd& w, RadialProfile f);

  Generator generator() const { return gen_; }
  int dim() const { return m_; }
  int components() const { return n_; }
  /// Densities of the Hessian-type integrands do not depend on the direction.
  bool equivariant() const { return equivariant_; }
  bool tangent() const { return tangent_; }
  int angular_degree() const { return degree_; }
  const RadialProfile& profile() const { return f_; }
  int axis() const { return axis_; }
  const Eigen::VectorXd& ambient() const { return w_; }

  /// Same pattern, different profile.
  TestField with_profile(RadialProfile f) const;
  TestField scaled(double c) const { return with_profile(f_.scaled(c)); }

  AngularJet angular(std::span<const double> y) const;
  /// eta at x = r y from the angular jet and profile values (f, f', f'').
  FieldJet jet(const AngularJet& a, std::span<const double> y, double r, const Eigen::Vector3d& f) const;
  FieldJet jet(std::span<const double> y, double r) const;

  std::string describe() const;

 private:
  void compile(const std::vector<NumericPoly>& phi);

  Generator gen_ = Generator::RadialScalar;
  int m_ = 0;
  int n_ = 0;
  int axis_ = -1;
  Eigen::VectorXd w_;
  bool equivariant_ = false;
  bool tangent_ = true;
  int degree_ = 0;
  RadialProfile f_;
  CompiledPolys cphi_, cdphi_, clapphi_;
};

/// Five tangent variations of q: two colatitude shifts, two tangent
/// derivatives, one ambient projection with a seeded direction.
std::vector<TestField> standard_hessian_fields(const DeformedMap& q, std::uint64_t seed = 42);

/// Three test functions for the weak equation, supported inside (0, 1).
std::vector<TestField> standard_residual_fields(const DeformedMap& q);

/// Ten radial profiles for the Hardy suite.
std::vector<RadialProfile> standard_hardy_profiles();

}  // namespace biharm
