#include "biharm/deformed_map.hpp"

#include <cmath>
#include <stdexcept>

namespace biharm {

long ell_eigenvalue(int m, int ell) { return static_cast<long>(ell) * (ell + m - 2); }

long angle_numerator(int m, int ell) { return ell_eigenvalue(m, ell) + 2L * m - 8; }

Rational angle_formula(int m, int ell) {
  Rational s(angle_numerator(m, ell), 2 * ell_eigenvalue(m, ell));
  s.canonicalize();
  return s;
}

std::optional<Rational> solve_alpha(int m, int ell) {
  if (ell < 1 || m < 2) return std::nullopt;
  if (m <= 4) return std::nullopt;
  Rational s = angle_formula(m, ell);
  if (s <= 0 || s >= 1) return std::nullopt;
  return s;
}

std::vector<NumericPoly> to_numeric(const TensorField& t, double factor) {
  std::vector<NumericPoly> out;
  out.reserve(t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    out.push_back(poly_cast<double>(reduce_mod_sphere(t.poly(i))) * (factor * t.scale(i).value()));
  return out;
}

namespace {

std::vector<NumericPoly> with_constant(std::vector<NumericPoly> polys, int m, double c) {
  polys.push_back(NumericPoly::constant(m, c));
  return polys;
}

}  // namespace

DeformedMap::DeformedMap(int m, int ell, double sin2alpha) : m_(m), ell_(ell), s2_(sin2alpha) {
  if (!(sin2alpha > 0 && sin2alpha < 1))
    throw std::invalid_argument("DeformedMap: sin^2(alpha) must lie in (0, 1)");
  tensor_ = std::make_shared<const TensorMap>(build_u(m, ell));
  n_ = static_cast<int>(tensor_->size()) + 1;
  s_ = std::sqrt(s2_);
  c_ = std::sqrt(1 - s2_);

  u_ = TensorField::from_map(*tensor_);
  for (int j = 0; j < m; ++j) du_.push_back(d_j(u_, j));
  lap_ = laplacian(u_);
  for (int j = 0; j < m; ++j) dlap_.push_back(d_j(lap_, j));
  bilap_ = laplacian(lap_);
  g_ = grad_dot(u_, u_);
  for (int j = 0; j < m; ++j) dg_.push_back(d_j(g_, j));

  // Every q-component list has n_ entries; the last is the cos(alpha) slot.
  cv_ = CompiledPolys(m, with_constant(to_numeric(u_, s_), m, c_));
  std::vector<NumericPoly> d, dl;
  for (int j = 0; j < m; ++j) {
    auto a = with_constant(to_numeric(du_[j], s_), m, 0.0);
    auto b = with_constant(to_numeric(dlap_[j], s_), m, 0.0);
    d.insert(d.end(), a.begin(), a.end());
    dl.insert(dl.end(), b.begin(), b.end());
  }
  cd_ = CompiledPolys(m, d);
  cdlap_ = CompiledPolys(m, dl);
  clap_ = CompiledPolys(m, with_constant(to_numeric(lap_, s_), m, 0.0));
  cbilap_ = CompiledPolys(m, with_constant(to_numeric(bilap_, s_), m, 0.0));
  cg_ = CompiledPolys(m, {poly_cast<double>(g_.poly) * s2_});
  std::vector<NumericPoly> dg;
  for (const auto& p : dg_) dg.push_back(poly_cast<double>(reduce_mod_sphere(p.poly)) * s2_);
  cdg_ = CompiledPolys(m, dg);
  for (const auto* c : {&cv_, &cd_, &clap_, &cdlap_, &cbilap_, &cg_, &cdg_})
    max_degree_ = std::max(max_degree_, c->max_degree());
}

DeformedMap DeformedMap::critical(int m, int ell) {
  auto s = solve_alpha(m, ell);
  if (!s) throw std::domain_error("no proper biharmonic angle for this (m, l)");
  return DeformedMap(m, ell, s->get_d());
}

MapJet DeformedMap::jet(std::span<const double> y, double r) const {
  MapJet j;
  j.r = r;
  j.y = Eigen::Map<const Eigen::VectorXd>(y.data(), m_);
  j.v.resize(n_);
  j.lap.resize(n_);
  j.bilap.resize(n_);
  j.d.resize(n_, m_);
  j.dlap.resize(n_, m_);
  j.dG.resize(m_);
  cv_.evaluate(y, {j.v.data(), static_cast<std::size_t>(n_)});
  clap_.evaluate(y, {j.lap.data(), static_cast<std::size_t>(n_)});
  cbilap_.evaluate(y, {j.bilap.data(), static_cast<std::size_t>(n_)});
  // column-major N x m: column j holds d_j of every component
  cd_.evaluate(y, {j.d.data(), static_cast<std::size_t>(n_ * m_)});
  cdlap_.evaluate(y, {j.dlap.data(), static_cast<std::size_t>(n_ * m_)});
  cg_.evaluate(y, {&j.G, 1});
  cdg_.evaluate(y, {j.dG.data(), static_cast<std::size_t>(m_)});
  if (r != 1.0) {
    const double r2 = r * r;
    j.d /= r;
    j.lap /= r2;
    j.dlap /= r2 * r;
    j.bilap /= r2 * r2;
    j.G /= r2;
    j.dG /= r2 * r;
  }
  return j;
}

MapJet DeformedMap::jet_at(std::span<const double> x) const {
  double r2 = 0;
  for (double v : x) r2 += v * v;
  if (r2 == 0) throw std::domain_error("DeformedMap: evaluation at the origin");
  const double r = std::sqrt(r2);
  std::vector<double> y(x.begin(), x.end());
  for (double& v : y) v /= r;
  return jet(y, r);
}

Eigen::VectorXd DeformedMap::value(std::span<const double> x) const { return jet_at(x).v; }

}  // namespace biharm
