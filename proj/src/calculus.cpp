#include "biharm/calculus.hpp"

namespace biharm {

TensorField TensorField::from_map(const TensorMap& t) {
  TensorField out(t.dim(), t.order(), 0);
  for (const auto& c : t.components()) out.push_back(c.scale, c.poly);
  return out;
}

TensorField TensorField::zero(int m, int ell, int weight) {
  TensorField out(m, ell, weight);
  std::size_t n = 1;
  for (int k = 0; k < ell; ++k) n *= static_cast<std::size_t>(m);
  for (std::size_t i = 0; i < n; ++i) out.push_back(SurdScale(), RationalPoly(m));
  return out;
}

TensorField TensorField::constant(int m, int ell, const Rational& c) {
  TensorField out = zero(m, ell, 0);
  for (auto& p : out.polys_) p = RationalPoly::constant(m, c);
  return out;
}

std::vector<double> TensorField::evaluate(std::span<const double> x) const {
  std::vector<double> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = scales_[i].value() * component(i).evaluate(x);
  return out;
}

TensorField d_j(const TensorField& t, int j) {
  TensorField out(t.dim(), t.order(), t.weight() + 1);
  for (std::size_t i = 0; i < t.size(); ++i) out.push_back(t.scale(i), d_j(t.component(i), j).poly);
  return out;
}

RadialPoly<Rational> grad_dot(const TensorField& a, const TensorField& b) {
  if (!a.same_shape(b)) throw std::invalid_argument("grad_dot: shape mismatch");
  const int m = a.dim();
  RationalPoly acc(m);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.poly(i).is_zero() || b.poly(i).is_zero()) continue;
    const SurdScale s = a.scale(i) * b.scale(i);
    if (!s.is_rational()) throw std::domain_error("grad_dot: irrational scale product");
    RationalPoly term(m);
    for (int j = 0; j < m; ++j) term += d_j(a.component(i), j).poly * d_j(b.component(i), j).poly;
    acc += term * s.rational();
  }
  return {reduce_mod_sphere(acc), a.weight() + b.weight() + 2};
}

TensorField euler_radial_contraction(const TensorField& t) {
  TensorField out(t.dim(), t.order(), t.weight() + 1);
  for (std::size_t i = 0; i < t.size(); ++i)
    out.push_back(t.scale(i), radial_contraction(t.component(i)).poly);
  return out;
}

TensorField laplacian(const TensorField& t) {
  TensorField out(t.dim(), t.order(), t.weight() + 2);
  for (std::size_t i = 0; i < t.size(); ++i) out.push_back(t.scale(i), laplacian(t.component(i)).poly);
  return out;
}

TensorField iterated_laplacian(const TensorField& t, int k) {
  if (k < 1) throw std::invalid_argument("iterated_laplacian: k must be at least 1");
  TensorField out = laplacian(t);
  for (int i = 1; i < k; ++i) out = laplacian(out);
  return out;
}

TensorField add_scaled(const TensorField& a, const RadialPoly<Rational>& f, const TensorField& b) {
  if (!a.same_shape(b)) throw std::invalid_argument("add_scaled: shape mismatch");
  if (a.weight() != b.weight() + f.weight)
    throw std::invalid_argument("add_scaled: radial weights differ");
  TensorField out(a.dim(), a.order(), a.weight());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const SurdScale& sa = a.scale(i);
    const SurdScale& sb = b.scale(i);
    if (b.poly(i).is_zero() || f.is_zero()) {
      out.push_back(sa, a.poly(i));
      continue;
    }
    if (a.poly(i).is_zero()) {
      out.push_back(sb, f.poly * b.poly(i));
      continue;
    }
    if (sa.radicand() != sb.radicand())
      throw std::domain_error("add_scaled: scales differ by an irrational factor");
    const Rational ratio = sb.rational() / sa.rational();
    out.push_back(sa, reduce_mod_sphere(a.poly(i) + f.poly * b.poly(i) * ratio));
  }
  return out;
}

TensorField scaled(const TensorField& t, const Rational& c, int dw) {
  TensorField out(t.dim(), t.order(), t.weight() + dw);
  for (std::size_t i = 0; i < t.size(); ++i) out.push_back(t.scale(i), t.poly(i) * c);
  return out;
}

bool is_zero_mod_sphere(const TensorField& t) {
  const RationalPoly zero(t.dim());
  for (std::size_t i = 0; i < t.size(); ++i)
    if (!poly_equal_mod_sphere(t.poly(i), zero)) return false;
  return true;
}

bool equal_mod_sphere(const TensorField& a, const TensorField& b) {
  if (!a.same_shape(b) || a.weight() != b.weight()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const bool za = a.poly(i).is_zero();
    const bool zb = b.poly(i).is_zero();
    if (za || zb) {
      const RationalPoly zero(a.dim());
      if (!poly_equal_mod_sphere(za ? b.poly(i) : a.poly(i), zero)) return false;
      continue;
    }
    if (a.scale(i).radicand() != b.scale(i).radicand()) return false;
    const RationalPoly pa = a.poly(i) * a.scale(i).rational();
    const RationalPoly pb = b.poly(i) * b.scale(i).rational();
    if (!poly_equal_mod_sphere(pa, pb)) return false;
  }
  return true;
}

Integer iterated_laplacian_coefficient(int m, int ell, int k) {
  Integer c = 1;
  for (int j = 1; j <= k; ++j) c *= Integer(2 * j + ell - 2) * Integer(2 * j - ell - m);
  return c;
}

double fd_check(const std::function<double(std::span<const double>)>& f, std::span<const double> x,
                int j, double h) {
  std::vector<double> xp(x.begin(), x.end());
  std::vector<double> xm(x.begin(), x.end());
  xp[j] += h;
  xm[j] -= h;
  return (f(xp) - f(xm)) / (2 * h);
}

}  // namespace biharm
