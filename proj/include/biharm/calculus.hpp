#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "biharm/poly.hpp"
#include "biharm/rational.hpp"
#include "biharm/tensor_map.hpp"

namespace biharm {

/// f(x) = P(y) / r^k with y = x/r. Axis indices are 0-based throughout.
template <class Scalar>
struct RadialPoly {
  PolyY<Scalar> poly;
  int weight = 0;

  RadialPoly() = default;
  RadialPoly(PolyY<Scalar> p, int k) : poly(std::move(p)), weight(k) {}

  int dim() const { return poly.dim(); }
  bool is_zero() const { return poly.is_zero(); }

  double evaluate(std::span<const double> x) const {
    double r2 = 0;
    for (double v : x) r2 += v * v;
    if (r2 == 0) throw std::domain_error("RadialPoly: evaluation at the origin");
    const double r = std::sqrt(r2);
    std::vector<double> y(x.begin(), x.end());
    for (double& v : y) v /= r;
    return poly.evaluate(y) / std::pow(r, weight);
  }
};

namespace detail {
template <class Scalar>
void require_same_weight(const RadialPoly<Scalar>& a, const RadialPoly<Scalar>& b) {
  if (a.weight != b.weight && !a.is_zero() && !b.is_zero())
    throw std::invalid_argument("RadialPoly: adding different radial weights");
}
}  // namespace detail

template <class Scalar>
RadialPoly<Scalar> operator+(const RadialPoly<Scalar>& a, const RadialPoly<Scalar>& b) {
  detail::require_same_weight(a, b);
  return {a.poly + b.poly, a.is_zero() ? b.weight : a.weight};
}
template <class Scalar>
RadialPoly<Scalar> operator-(const RadialPoly<Scalar>& a, const RadialPoly<Scalar>& b) {
  detail::require_same_weight(a, b);
  return {a.poly - b.poly, a.is_zero() ? b.weight : a.weight};
}
template <class Scalar>
RadialPoly<Scalar> operator*(const RadialPoly<Scalar>& a, const RadialPoly<Scalar>& b) {
  return {a.poly * b.poly, a.weight + b.weight};
}
template <class Scalar>
RadialPoly<Scalar> operator*(const Scalar& s, const RadialPoly<Scalar>& a) {
  return {a.poly * s, a.weight};
}

/// d/dx_j [P(y) r^-k] = r^-(k+1) [dP/dy_j - y_j (<y, grad_y P> + k P)].
/// No homogeneity of P is assumed.
template <class Scalar>
RadialPoly<Scalar> d_j(const RadialPoly<Scalar>& f, int j) {
  if (j < 0 || j >= f.dim()) throw std::out_of_range("d_j: axis out of range");
  return {f.poly.diff(j) - f.poly.euler_shifted(f.weight).times_variable(j), f.weight + 1};
}

/// sum_j y_j d_j f, i.e. r^-1 times the radial derivative r d/dr.
template <class Scalar>
RadialPoly<Scalar> radial_contraction(const RadialPoly<Scalar>& f) {
  RadialPoly<Scalar> out(PolyY<Scalar>(f.dim()), f.weight + 1);
  for (int j = 0; j < f.dim(); ++j) out.poly += d_j(f, j).poly.times_variable(j);
  return out;
}

/// Scalar Laplacian, result reduced to the sphere normal form.
template <class Scalar>
RadialPoly<Scalar> laplacian(const RadialPoly<Scalar>& f) {
  RadialPoly<Scalar> out(PolyY<Scalar>(f.dim()), f.weight + 2);
  for (int j = 0; j < f.dim(); ++j) out.poly += d_j(d_j(f, j), j).poly;
  out.poly = reduce_mod_sphere(out.poly);
  return out;
}

/// Multi-index family of RadialPoly with one SurdScale per component and a
/// shared weight. Component I has value scale_I * poly_I(y) / r^weight.
class TensorField {
 public:
  TensorField() = default;
  TensorField(int m, int ell, int weight) : m_(m), ell_(ell), weight_(weight) {}

  static TensorField from_map(const TensorMap& t);
  static TensorField zero(int m, int ell, int weight = 0);
  /// Every component equal to the same constant.
  static TensorField constant(int m, int ell, const Rational& c);

  int dim() const { return m_; }
  int order() const { return ell_; }
  int weight() const { return weight_; }
  std::size_t size() const { return polys_.size(); }

  const RationalPoly& poly(std::size_t i) const { return polys_[i]; }
  const SurdScale& scale(std::size_t i) const { return scales_[i]; }
  RadialPoly<Rational> component(std::size_t i) const { return {polys_[i], weight_}; }

  void push_back(SurdScale s, RationalPoly p) {
    scales_.push_back(std::move(s));
    polys_.push_back(std::move(p));
  }
  void set_weight(int w) { weight_ = w; }

  bool same_shape(const TensorField& o) const {
    return m_ == o.m_ && ell_ == o.ell_ && size() == o.size();
  }

  /// Numeric evaluation of every component at x.
  std::vector<double> evaluate(std::span<const double> x) const;

 private:
  int m_ = 0;
  int ell_ = 0;
  int weight_ = 0;
  std::vector<SurdScale> scales_;
  std::vector<RationalPoly> polys_;
};

/// Component-wise d/dx_j.
TensorField d_j(const TensorField& t, int j);

/// sum_j sum_I d_j(a_I) d_j(b_I). Throws on shape mismatch or when a
/// component product of scales is irrational.
RadialPoly<Rational> grad_dot(const TensorField& a, const TensorField& b);

/// Component-wise sum_j y_j d_j(t_I).
TensorField euler_radial_contraction(const TensorField& t);

TensorField laplacian(const TensorField& t);
TensorField iterated_laplacian(const TensorField& t, int k);

/// a_I + c * f * b_I component-wise; scales of a_I and b_I must agree up to a
/// rational factor. Weights must match after multiplying by f.
TensorField add_scaled(const TensorField& a, const RadialPoly<Rational>& f, const TensorField& b);

/// Multiply every component by a rational constant and raise weight by dw
/// (i.e. multiply by c / r^dw).
TensorField scaled(const TensorField& t, const Rational& c, int dw);

/// True iff every component polynomial is zero modulo |y|^2 - 1.
bool is_zero_mod_sphere(const TensorField& t);

/// True iff a and b agree component-wise as functions on B^m \ {0}.
bool equal_mod_sphere(const TensorField& a, const TensorField& b);

/// prod_{j=1..k} (2j+l-2)(2j-l-m).
Integer iterated_laplacian_coefficient(int m, int ell, int k);

/// Central difference (f(x + h e_j) - f(x - h e_j)) / (2h).
double fd_check(const std::function<double(std::span<const double>)>& f, std::span<const double> x,
                int j, double h);

}  // namespace biharm
