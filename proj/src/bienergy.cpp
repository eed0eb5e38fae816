#include "biharm/bienergy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "biharm/kernels.hpp"

namespace biharm {

QDensities q_densities(int m, int ell, double s) {
  const double L = static_cast<double>(ell_eigenvalue(m, ell));
  const double K = static_cast<double>(angle_numerator(m, ell));
  QDensities d;
  d.A = s * L;
  d.B = s * L * K;
  d.C = d.A * d.A;
  return d;
}

ExactQDensities q_densities_exact(int m, int ell, const Rational& s) {
  const Rational L(ell_eigenvalue(m, ell));
  const Rational K(angle_numerator(m, ell));
  ExactQDensities d{s * L, s * L * K, s * L * s * L};
  d.A.canonicalize();
  d.B.canonicalize();
  d.C.canonicalize();
  return d;
}

std::pair<double, double> q_density_numeric_check(const DeformedMap& q, std::span<const double> x) {
  const MapJet j = q.jet_at(x);
  return {j.d.squaredNorm(), j.bilap.dot(j.v)};
}

EnergyReport sobolev_report(int m, int ell, const QuadratureSpec& spec) {
  if (ell < 1 || ell > m) throw std::invalid_argument("sobolev_report: need 1 <= ell <= m");
  EnergyReport rep;
  rep.sin2alpha = angle_formula(m, ell);
  if (rep.sin2alpha <= 0 || rep.sin2alpha >= 1)
    throw std::domain_error("sobolev_report: the angle equation has no solution in (0, 1)");
  rep.membership = m >= 5;
  const double s = rep.sin2alpha.get_d();
  const double L = static_cast<double>(ell_eigenvalue(m, ell));
  const QDensities d = q_densities(m, ell, s);
  const RadialIntegrand inv2{[](double r) { return 1 / (r * r); }, 2, {}};
  const RadialIntegrand inv4{[](double r) { return 1 / (r * r * r * r); }, 4, {}};
  rep.dirichlet = d.A * radial_integral(inv2, m, spec);
  const double i4 = radial_integral(inv4, m, spec);
  rep.bilaplacian_l2 = s * L * L * i4;
  rep.grad4 = d.C * i4;
  rep.bienergy = 0.5 * (rep.bilaplacian_l2 - rep.grad4);
  return rep;
}

ResidualReport weak_residual(const DeformedMap& q, const TestField& phi, const QuadratureSpec& spec,
                             AngularMode mode) {
  ResidualReport rep;
  if (phi.profile().is_zero()) return rep;
  const RadialProfile& f = phi.profile();
  if (!(f.support_lo() > 0 && f.support_hi() < 1))
    throw std::invalid_argument("weak_residual: test function must be supported inside the open annulus");
  std::vector<double> terms;
  if (mode == AngularMode::MonteCarlo) {
    for (const auto& e : integrate_mc(&q, phi, weak_residual_terms, kResidualTerms, spec))
      terms.push_back(e.estimate);
  } else {
    const SphereRule rule = mode == AngularMode::ProductGauss
                                ? sphere_rule_for_degree(q.dim(), 4 * q.max_degree() + 2 * phi.angular_degree() + 2)
                                : angular_rule(&q, phi);
    terms = integrate_linear(&q, phi, weak_residual_terms, kResidualTerms, -2.0, spec, rule);
  }
  for (int t = 0; t < kResidualTerms; ++t) {
    rep.terms[t] = terms[t];
    rep.value += terms[t];
    rep.largest_term = std::max(rep.largest_term, std::abs(terms[t]));
  }
  return rep;
}

double bienergy_value(const DeformedMap& q, const QuadratureSpec& spec) {
  const double s = q.sin2alpha();
  const double L = q.L();
  const QDensities d = q_densities(q.dim(), q.order(), s);
  const RadialIntegrand h{[&](double r) { return 0.5 * (s * L * L - d.C) / std::pow(r, 4); }, 4, {}};
  return radial_integral(h, q.dim(), spec);
}

McEstimate bienergy_value(const DensitySampler& u, int m, const QuadratureSpec& spec) {
  return ball_integral_mc(
      [&](std::span<const double> x) {
        const auto [lap2, g] = u(x);
        return 0.5 * (lap2 - g * g);
      },
      m, spec);
}

std::array<McEstimate, 4> sobolev_mc(const DeformedMap& q, const QuadratureSpec& spec) {
  const auto t = ball_integral_mc_terms(
      [&q](std::span<const double> x, std::span<double> out) {
        const MapJet j = q.jet_at(x);
        const double g = j.d.squaredNorm(), lap2 = j.lap.squaredNorm();
        out[0] = g;
        out[1] = lap2;
        out[2] = g * g;
        out[3] = 0.5 * (lap2 - g * g);
      },
      4, q.dim(), spec);
  return {t[0], t[1], t[2], t[3]};
}

DensitySampler density_sampler(const DeformedMap& q) {
  return [&q](std::span<const double> x) {
    const MapJet j = q.jet_at(x);
    return std::pair{j.lap.squaredNorm(), j.d.squaredNorm()};
  };
}

}  // namespace biharm
