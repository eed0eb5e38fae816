#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "biharm/calculus.hpp"
#include "biharm/compiled.hpp"
#include "biharm/tensor_map.hpp"

namespace biharm {

/// sin^2(alpha) = K / (2L) with L = l(l+m-2), K = L + 2m - 8, before any
/// admissibility test.
Rational angle_formula(int m, int ell);

/// sin^2(alpha) of the proper biharmonic deformation, when it exists:
/// 0 < s < 1 and m >= 5 (q in W^{2,2}).
std::optional<Rational> solve_alpha(int m, int ell);

/// L = l(l+m-2), the eigenvalue of u^(l) on the sphere.
long ell_eigenvalue(int m, int ell);
/// K = L + 2m - 8 = (l+2)(m+l-4).
long angle_numerator(int m, int ell);

/// Derivatives of q at one point. d(i, j) = d_j q_i, dlap(i, j) = d_j (Lap q)_i.
struct MapJet {
  double r = 1;
  Eigen::VectorXd y;
  Eigen::VectorXd v;
  Eigen::MatrixXd d;
  Eigen::VectorXd lap;
  Eigen::MatrixXd dlap;
  Eigen::VectorXd bilap;
  double G = 0;  // |dq|^2
  Eigen::VectorXd dG;
};

/// q = (sin(alpha) u^(l), cos(alpha)) : B^m \ {0} -> S^(m^l).
///
/// All derivatives of u are produced by the exact calculus module and then
/// compiled for numeric evaluation. Any sin2alpha in (0, 1) is accepted so
/// that non-critical maps can be probed too.
class DeformedMap {
 public:
  DeformedMap(int m, int ell, double sin2alpha);

  /// The proper biharmonic map; throws std::domain_error when none exists.
  static DeformedMap critical(int m, int ell);

  int dim() const { return m_; }
  int order() const { return ell_; }
  /// m^l + 1
  int components() const { return n_; }
  double sin2alpha() const { return s2_; }
  double sin_alpha() const { return s_; }
  double cos_alpha() const { return c_; }
  double L() const { return static_cast<double>(ell_eigenvalue(m_, ell_)); }

  const TensorMap& tensor() const { return *tensor_; }
  const TensorField& u() const { return u_; }
  const TensorField& du(int j) const { return du_[j]; }
  const TensorField& lap_u() const { return lap_; }
  const TensorField& bilap_u() const { return bilap_; }
  /// |du|^2 of u itself (not q).
  const RadialPoly<Rational>& energy_density_u() const { return g_; }

  /// Highest polynomial degree among the compiled jets.
  int max_degree() const { return max_degree_; }

  /// Jet at x = r y, |y| = 1.
  MapJet jet(std::span<const double> y, double r) const;
  /// Jet at an arbitrary x != 0.
  MapJet jet_at(std::span<const double> x) const;

  Eigen::VectorXd value(std::span<const double> x) const;

 private:
  int m_;
  int ell_;
  int n_;
  double s2_, s_, c_;
  std::shared_ptr<const TensorMap> tensor_;
  TensorField u_;
  std::vector<TensorField> du_;
  TensorField lap_;
  std::vector<TensorField> dlap_;
  TensorField bilap_;
  RadialPoly<Rational> g_;
  std::vector<RadialPoly<Rational>> dg_;
  CompiledPolys cv_, cd_, clap_, cdlap_, cbilap_, cg_, cdg_;
  int max_degree_ = 0;
};

/// Numeric polynomials of a tensor field with scales folded in, times factor.
std::vector<NumericPoly> to_numeric(const TensorField& t, double factor = 1.0);

}  // namespace biharm
