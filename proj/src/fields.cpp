#include "biharm/fields.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "biharm/quadrature.hpp"

namespace biharm {

namespace {

// Coefficients of (1 - r^2)^2 r^s poly(r) as a dense polynomial in r.
std::vector<double> bump_coefficients(int s, const std::vector<double>& poly) {
  const double base[5] = {1, 0, -2, 0, 1};
  std::vector<double> out(s + 5 + poly.size(), 0.0);
  for (std::size_t i = 0; i < poly.size(); ++i)
    for (int k = 0; k < 5; ++k) out[s + k + i] += base[k] * poly[i];
  return out;
}

}  // namespace

RadialProfile RadialProfile::polynomial_bump(int s, std::vector<double> poly) {
  if (s < 0) throw std::invalid_argument("polynomial_bump: s must be non-negative");
  RadialProfile p;
  p.basis_ = Basis::PolynomialBump;
  p.s_ = s;
  p.coeffs_ = std::move(poly);
  p.lo_ = 0;
  p.hi_ = 1;
  return p;
}

std::vector<double> RadialProfile::spline_knots(double inner, int n_basis) {
  if (!(inner > 0 && inner < 1)) throw std::invalid_argument("spline: inner cutoff must lie in (0, 1)");
  if (n_basis < 1) throw std::invalid_argument("spline: need at least one basis function");
  const int intervals = n_basis + 3;
  std::vector<double> t(intervals + 1);
  for (int i = 0; i <= intervals; ++i) t[i] = inner * std::pow(1.0 / inner, static_cast<double>(i) / intervals);
  t.back() = 1.0;
  return t;
}

RadialProfile RadialProfile::spline(double inner, std::vector<double> coeffs) {
  RadialProfile p;
  p.basis_ = Basis::SplineCoefficients;
  p.knots_ = spline_knots(inner, static_cast<int>(coeffs.size()));
  p.coeffs_ = std::move(coeffs);
  p.lo_ = inner;
  p.hi_ = 1;
  return p;
}

RadialProfile RadialProfile::compact_bump(double a, double b, double amplitude) {
  if (!(a >= 0 && a < b && b <= 1)) throw std::invalid_argument("compact_bump: need 0 <= a < b <= 1");
  RadialProfile p;
  p.basis_ = Basis::CompactBump;
  p.lo_ = a;
  p.hi_ = b;
  p.amp_ = amplitude;
  p.s_ = 3;
  p.knots_ = {a, b};
  return p;
}

namespace {

double bs_step(const std::vector<double>& t, int i, double r) {
  const bool last = i + 2 == static_cast<int>(t.size());
  return (t[i] <= r && (r < t[i + 1] || (last && r == t[i + 1]))) ? 1.0 : 0.0;
}

double bs_value(const std::vector<double>& t, int i, int k, double r) {
  if (k == 0) return bs_step(t, i, r);
  double v = 0;
  const double d1 = t[i + k] - t[i];
  const double d2 = t[i + k + 1] - t[i + 1];
  if (d1 > 0) v += (r - t[i]) / d1 * bs_value(t, i, k - 1, r);
  if (d2 > 0) v += (t[i + k + 1] - r) / d2 * bs_value(t, i + 1, k - 1, r);
  return v;
}

double bs_slope(const std::vector<double>& t, int i, int k, double r) {
  return k * (bs_value(t, i, k - 1, r) / (t[i + k] - t[i]) -
              bs_value(t, i + 1, k - 1, r) / (t[i + k + 1] - t[i + 1]));
}

}  // namespace

Eigen::Vector3d RadialProfile::bspline(const std::vector<double>& t, int i, double r) {
  if (r < t[i] || r > t[i + 4]) return Eigen::Vector3d::Zero();
  const double b = bs_value(t, i, 3, r);
  const double d1 = bs_slope(t, i, 3, r);
  const double d2 = 3 * (bs_slope(t, i, 2, r) / (t[i + 3] - t[i]) -
                         bs_slope(t, i + 1, 2, r) / (t[i + 4] - t[i + 1]));
  return {b, d1, d2};
}

Eigen::Vector3d RadialProfile::eval(double r) const {
  Eigen::Vector3d out = Eigen::Vector3d::Zero();
  switch (basis_) {
    case Basis::PolynomialBump: {
      const auto c = bump_coefficients(s_, coeffs_);
      // Horner for f, f', f''
      for (std::size_t k = c.size(); k-- > 0;) {
        out[2] = out[2] * r + 2 * out[1];
        out[1] = out[1] * r + out[0];
        out[0] = out[0] * r + c[k];
      }
      break;
    }
    case Basis::SplineCoefficients: {
      if (r < lo_ || r > hi_) break;
      for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) out += coeffs_[i] * bspline(knots_, static_cast<int>(i), r);
      break;
    }
    case Basis::CompactBump: {
      if (r <= lo_ || r >= hi_) break;
      const double h = 0.5 * (hi_ - lo_);
      const double norm = amp_ / std::pow(h, 6);
      const double p = (r - lo_) * (hi_ - r);
      const double dp = lo_ + hi_ - 2 * r;
      out[0] = norm * p * p * p;
      out[1] = norm * 3 * p * p * dp;
      out[2] = norm * (6 * p * dp * dp - 6 * p * p);
      break;
    }
  }
  return out;
}

bool RadialProfile::is_zero() const {
  if (basis_ == Basis::CompactBump) return amp_ == 0;
  for (double c : coeffs_)
    if (c != 0) return false;
  return true;
}

RadialProfile RadialProfile::scaled(double c) const {
  RadialProfile p = *this;
  for (double& v : p.coeffs_) v *= c;
  p.amp_ *= c;
  return p;
}

std::string RadialProfile::describe() const {
  std::ostringstream os;
  switch (basis_) {
    case Basis::PolynomialBump:
      os << "poly_bump(s=" << s_ << ",n=" << coeffs_.size() << ")";
      break;
    case Basis::SplineCoefficients:
      os << "spline(inner=" << lo_ << ",n=" << coeffs_.size() << ")";
      break;
    case Basis::CompactBump:
      os << "compact_bump[" << lo_ << "," << hi_ << "]";
      break;
  }
  return os.str();
}

std::string to_string(Generator g) {
  switch (g) {
    case Generator::ColatitudeShift:
      return "colatitude_shift";
    case Generator::TangentDerivative:
      return "tangent_derivative";
    case Generator::AmbientProjected:
      return "ambient_projected";
    case Generator::RadialScalar:
      return "radial_scalar";
  }
  return "?";
}

void TestField::compile(const std::vector<NumericPoly>& phi) {
  n_ = static_cast<int>(phi.size());
  std::vector<NumericPoly> reduced, d, lap;
  for (const auto& p : phi) {
    reduced.push_back(reduce_mod_sphere(p));
    lap.push_back(laplacian(RadialPoly<double>(reduced.back(), 0)).poly);
  }
  for (int j = 0; j < m_; ++j)
    for (const auto& p : reduced) d.push_back(reduce_mod_sphere(d_j(RadialPoly<double>(p, 0), j).poly));
  cphi_ = CompiledPolys(m_, reduced);
  cdphi_ = CompiledPolys(m_, d);
  clapphi_ = CompiledPolys(m_, lap);
  degree_ = std::max({cphi_.max_degree(), cdphi_.max_degree(), clapphi_.max_degree()});
}

TestField TestField::colatitude_shift(const DeformedMap& q, RadialProfile f) {
  TestField t;
  t.gen_ = Generator::ColatitudeShift;
  t.m_ = q.dim();
  t.f_ = std::move(f);
  t.equivariant_ = true;
  auto phi = to_numeric(q.u(), q.cos_alpha());
  phi.push_back(NumericPoly::constant(q.dim(), -q.sin_alpha()));
  t.compile(phi);
  return t;
}

TestField TestField::tangent_derivative(const DeformedMap& q, int j, RadialProfile f) {
  if (j < 0 || j >= q.dim()) throw std::out_of_range("tangent_derivative: axis out of range");
  TestField t;
  t.gen_ = Generator::TangentDerivative;
  t.m_ = q.dim();
  t.axis_ = j;
  t.f_ = std::move(f);
  auto phi = to_numeric(q.du(j));
  phi.push_back(NumericPoly(q.dim()));
  t.compile(phi);
  return t;
}

TestField TestField::ambient_projected(const DeformedMap& q, const Eigen::VectorXd& w, RadialProfile f) {
  const int m = q.dim();
  if (w.size() != q.components()) throw std::invalid_argument("ambient_projected: w has wrong size");
  TestField t;
  t.gen_ = Generator::AmbientProjected;
  t.m_ = m;
  t.w_ = w;
  t.f_ = std::move(f);
  auto qv = to_numeric(q.u(), q.sin_alpha());
  qv.push_back(NumericPoly::constant(m, q.cos_alpha()));
  NumericPoly wq(m);
  for (std::size_t i = 0; i < qv.size(); ++i) wq += qv[i] * w[static_cast<Eigen::Index>(i)];
  wq = reduce_mod_sphere(wq);
  std::vector<NumericPoly> phi;
  for (std::size_t i = 0; i < qv.size(); ++i)
    phi.push_back(NumericPoly::constant(m, w[static_cast<Eigen::Index>(i)]) - wq * qv[i]);
  t.compile(phi);
  return t;
}

TestField TestField::radial_scalar(int m, const Eigen::VectorXd& w, RadialProfile f) {
  TestField t;
  t.gen_ = Generator::RadialScalar;
  t.m_ = m;
  t.w_ = w;
  t.f_ = std::move(f);
  t.equivariant_ = true;
  t.tangent_ = false;
  std::vector<NumericPoly> phi;
  for (Eigen::Index i = 0; i < w.size(); ++i) phi.push_back(NumericPoly::constant(m, w[i]));
  t.compile(phi);
  return t;
}

TestField TestField::with_profile(RadialProfile f) const {
  TestField t = *this;
  t.f_ = std::move(f);
  return t;
}

AngularJet TestField::angular(std::span<const double> y) const {
  AngularJet a;
  a.phi.resize(n_);
  a.dphi.resize(n_, m_);
  a.lapphi.resize(n_);
  cphi_.evaluate(y, {a.phi.data(), static_cast<std::size_t>(n_)});
  cdphi_.evaluate(y, {a.dphi.data(), static_cast<std::size_t>(n_ * m_)});
  clapphi_.evaluate(y, {a.lapphi.data(), static_cast<std::size_t>(n_)});
  return a;
}

FieldJet TestField::jet(const AngularJet& a, std::span<const double> y, double r,
                        const Eigen::Vector3d& f) const {
  FieldJet j;
  const Eigen::Map<const Eigen::VectorXd> yv(y.data(), m_);
  j.v = f[0] * a.phi;
  j.d = f[1] * a.phi * yv.transpose() + (f[0] / r) * a.dphi;
  j.lap = (f[2] + (m_ - 1) * f[1] / r) * a.phi + (2 * f[1] / r) * (a.dphi * yv) + (f[0] / (r * r)) * a.lapphi;
  return j;
}

FieldJet TestField::jet(std::span<const double> y, double r) const {
  return jet(angular(y), y, r, f_.eval(r));
}

std::string TestField::describe() const {
  std::string s = to_string(gen_);
  if (gen_ == Generator::TangentDerivative) s += "_" + std::to_string(axis_);
  return s + " " + f_.describe();
}

std::vector<TestField> standard_hessian_fields(const DeformedMap& q, std::uint64_t seed) {
  const CounterRng rng(seed);
  Eigen::VectorXd w(q.components());
  for (Eigen::Index i = 0; i < w.size(); ++i) w[i] = 2 * rng.uniform(7, static_cast<std::uint64_t>(i)) - 1;
  return {
      TestField::colatitude_shift(q, RadialProfile::polynomial_bump(2)),
      TestField::colatitude_shift(q, RadialProfile::spline(0.01, {0.3, 1.0, -0.4, 0.8, 0.2, 0.5})),
      TestField::tangent_derivative(q, 0, RadialProfile::polynomial_bump(2, {1.0, 0.5})),
      TestField::tangent_derivative(q, q.dim() - 1, RadialProfile::compact_bump(0.1, 0.9)),
      TestField::ambient_projected(q, w, RadialProfile::polynomial_bump(2)),
  };
}

std::vector<TestField> standard_residual_fields(const DeformedMap& q) {
  // tangent derivatives are left out: their residual vanishes at every angle
  Eigen::VectorXd w = Eigen::VectorXd::Zero(q.components());
  w[0] = 0.7;
  w[q.components() - 1] = 1.0;
  return {TestField::colatitude_shift(q, RadialProfile::compact_bump(0.2, 0.8)),
          TestField::colatitude_shift(q, RadialProfile::compact_bump(0.3, 0.9)),
          TestField::ambient_projected(q, w, RadialProfile::compact_bump(0.15, 0.7))};
}

std::vector<RadialProfile> standard_hardy_profiles() {
  return {RadialProfile::polynomial_bump(2),
          RadialProfile::polynomial_bump(2, {1.0, -0.8}),
          RadialProfile::polynomial_bump(3, {0.5, 1.0, 0.3}),
          RadialProfile::polynomial_bump(4),
          RadialProfile::compact_bump(0.1, 0.9),
          RadialProfile::compact_bump(0.02, 0.3),
          RadialProfile::compact_bump(0.5, 0.6),
          RadialProfile::spline(0.01, {1.0, 0.5, 0.25, 0.1}),
          RadialProfile::spline(0.05, {0.0, 1.0, -1.0, 1.0, 0.0, 0.5, 0.2, 1.0}),
          RadialProfile::spline(0.01, std::vector<double>(12, 1.0))};
}

}  // namespace biharm
