#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "biharm/rational.hpp"

namespace biharm {

/// Product of powers of y_1..y_m. Only non-zero exponents are stored, as
/// (variable, exponent) pairs sorted by variable. Variables are 0-based.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(int i, int power = 1);

  int exponent(int var) const;
  int degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }

  const std::vector<std::pair<int, int>>& factors() const { return factors_; }

  /// Multiply in y_var^power (power may be negative as long as the result stays >= 0).
  Monomial times_var(int var, int power) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);

  friend bool operator<(const Monomial& a, const Monomial& b) { return a.factors_ < b.factors_; }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<std::pair<int, int>> factors_;
  int degree_ = 0;
};

namespace detail {
template <class Scalar>
bool is_zero(const Scalar& c) {
  return c == 0;
}
}  // namespace detail

/// Polynomial in y = x / r with coefficients in Scalar (Rational for the exact
/// pipeline, double for compiled numeric evaluation). Zero coefficients are
/// never stored.
template <class Scalar>
class PolyY {
 public:
  using Terms = std::map<Monomial, Scalar>;

  PolyY() = default;
  explicit PolyY(int m) : m_(m) {}

  static PolyY constant(int m, const Scalar& c) {
    PolyY p(m);
    p.add_term(Monomial{}, c);
    return p;
  }
  static PolyY variable(int m, int i) {
    PolyY p(m);
    p.add_term(Monomial::variable(i), Scalar(1));
    return p;
  }
  /// |y|^2
  static PolyY norm_squared(int m) {
    PolyY p(m);
    for (int i = 0; i < m; ++i) p.add_term(Monomial::variable(i, 2), Scalar(1));
    return p;
  }

  int dim() const { return m_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [mono, c] : terms_) d = std::max(d, mono.degree());
    return d;
  }

  void add_term(const Monomial& mono, const Scalar& c) {
    if (detail::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
      it->second += c;
      if (detail::is_zero(it->second)) terms_.erase(it);
    }
  }

  Scalar coefficient(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  PolyY& operator+=(const PolyY& o) {
    adopt_dim(o);
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
  }
  PolyY& operator-=(const PolyY& o) {
    adopt_dim(o);
    for (const auto& [mono, c] : o.terms_) add_term(mono, Scalar(-c));
    return *this;
  }
  PolyY& operator*=(const Scalar& s) {
    if (detail::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [mono, c] : terms_) c *= s;
    return *this;
  }

  friend PolyY operator+(PolyY a, const PolyY& b) { return a += b; }
  friend PolyY operator-(PolyY a, const PolyY& b) { return a -= b; }
  friend PolyY operator-(PolyY a) { return a *= Scalar(-1); }
  friend PolyY operator*(PolyY a, const Scalar& s) { return a *= s; }
  friend PolyY operator*(const Scalar& s, PolyY a) { return a *= s; }
  friend PolyY operator*(const PolyY& a, const PolyY& b) {
    PolyY out(std::max(a.m_, b.m_));
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, Scalar(ca * cb));
    return out;
  }
  PolyY& operator*=(const PolyY& o) { return *this = *this * o; }

  friend bool operator==(const PolyY& a, const PolyY& b) { return a.terms_ == b.terms_; }

  /// Sum of the terms of total degree d.
  PolyY homogeneous_part(int d) const {
    PolyY out(m_);
    for (const auto& [mono, c] : terms_)
      if (mono.degree() == d) out.terms_.emplace(mono, c);
    return out;
  }

  /// Partial derivative with respect to y_j (the polynomial variable, not x_j).
  PolyY diff(int j) const {
    PolyY out(m_);
    for (const auto& [mono, c] : terms_) {
      const int e = mono.exponent(j);
      if (e == 0) continue;
      out.add_term(mono.times_var(j, -1), Scalar(c * e));
    }
    return out;
  }

  /// sum over terms of (deg(term) + shift) * term; equals <y, grad P> + shift * P.
  PolyY euler_shifted(int shift) const {
    PolyY out(m_);
    for (const auto& [mono, c] : terms_) out.add_term(mono, Scalar(c * (mono.degree() + shift)));
    return out;
  }

  /// Multiply by y_j.
  PolyY times_variable(int j) const {
    PolyY out(m_);
    for (const auto& [mono, c] : terms_) out.terms_.emplace(mono.times_var(j, 1), c);
    return out;
  }

  template <class Out = double>
  Out evaluate(std::span<const double> y) const {
    Out acc = 0;
    for (const auto& [mono, c] : terms_) {
      Out t = static_cast<Out>(to_double_any(c));
      for (const auto& [v, e] : mono.factors()) {
        double p = 1.0;
        for (int k = 0; k < e; ++k) p *= y[v];
        t *= p;
      }
      acc += t;
    }
    return acc;
  }

 private:
  static double to_double_any(const double& c) { return c; }
  static double to_double_any(const Rational& c) { return c.get_d(); }

  void adopt_dim(const PolyY& o) {
    if (m_ == 0) m_ = o.m_;
  }

  int m_ = 0;
  Terms terms_;
};

using RationalPoly = PolyY<Rational>;
using NumericPoly = PolyY<double>;

template <class Scalar>
PolyY<Scalar> pow(const PolyY<Scalar>& p, int e) {
  PolyY<Scalar> out = PolyY<Scalar>::constant(p.dim(), Scalar(1));
  for (int k = 0; k < e; ++k) out *= p;
  return out;
}

/// Multiply every graded piece of p by the power of |y|^2 that lifts it to
/// degree `degree`. Throws if some piece has the wrong parity or is too high.
template <class Scalar>
PolyY<Scalar> homogenize(const PolyY<Scalar>& p, int degree) {
  const int m = p.dim();
  PolyY<Scalar> out(m);
  const PolyY<Scalar> s = PolyY<Scalar>::norm_squared(m);
  for (int d = p.degree(); d >= 0; --d) {
    PolyY<Scalar> piece = p.homogeneous_part(d);
    if (piece.is_zero()) continue;
    if (d > degree || (degree - d) % 2 != 0)
      throw std::logic_error("homogenize: piece of degree " + std::to_string(d) +
                             " cannot be lifted to degree " + std::to_string(degree));
    out += piece * pow(s, (degree - d) / 2);
  }
  return out;
}

/// True iff p - q vanishes on the unit sphere |y| = 1, i.e. lies in the ideal
/// generated by |y|^2 - 1. Even and odd graded pieces of the difference are
/// lifted separately to a common degree with powers of |y|^2; a homogeneous
/// polynomial vanishing on the sphere is identically zero.
template <class Scalar>
bool poly_equal_mod_sphere(const PolyY<Scalar>& p, const PolyY<Scalar>& q) {
  const PolyY<Scalar> diff = p - q;
  if (diff.is_zero()) return true;
  const int top = diff.degree();
  for (int parity = 0; parity < 2; ++parity) {
    PolyY<Scalar> part(diff.dim());
    for (int d = parity; d <= top; d += 2) part += diff.homogeneous_part(d);
    if (part.is_zero()) continue;
    const int target = part.degree();
    if (!homogenize(part, target).is_zero()) return false;
  }
  return true;
}

/// Normal form modulo |y|^2 - 1: every occurrence of y_m^2 (last variable) is
/// replaced by 1 - sum_{i<m} y_i^2 until no monomial contains y_m^2. The
/// result is unique on the sphere and never has larger total degree.
template <class Scalar>
PolyY<Scalar> reduce_mod_sphere(const PolyY<Scalar>& p) {
  const int m = p.dim();
  if (m == 0) return p;
  const int last = m - 1;
  PolyY<Scalar> out(m);
  std::vector<std::pair<Monomial, Scalar>> work(p.terms().begin(), p.terms().end());
  while (!work.empty()) {
    auto [mono, c] = std::move(work.back());
    work.pop_back();
    const int e = mono.exponent(last);
    if (e < 2) {
      out.add_term(mono, c);
      continue;
    }
    const Monomial base = mono.times_var(last, -2);
    work.emplace_back(base, c);
    for (int i = 0; i < last; ++i) work.emplace_back(base.times_var(i, 2), Scalar(-c));
  }
  return out;
}

template <class To, class From>
PolyY<To> poly_cast(const PolyY<From>& p) {
  PolyY<To> out(p.dim());
  for (const auto& [mono, c] : p.terms()) {
    if constexpr (std::is_same_v<From, Rational> && std::is_same_v<To, double>)
      out.add_term(mono, c.get_d());
    else
      out.add_term(mono, To(c));
  }
  return out;
}

std::string to_string(const Monomial& mono);
std::string to_string(const RationalPoly& p);

}  // namespace biharm
