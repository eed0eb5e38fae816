#include "biharm/kernels.hpp"

#include <cmath>

namespace biharm {

double grad_pairing(const MapJet& u, const FieldJet& eta) { return u.d.cwiseProduct(eta.d).sum(); }

void sphere_hessian_terms(const MapJet& u, const FieldJet& eta, std::span<double> out) {
  const double eta2 = eta.v.squaredNorm();
  const double cross = grad_pairing(u, eta);
  out[0] = eta.lap.squaredNorm();
  out[1] = 2 * u.G * u.G * eta2;
  out[2] = -u.bilap.dot(u.v) * eta2;
  out[3] = -2 * u.G * eta.d.squaredNorm();
  out[4] = -4 * cross * cross;
}

void jiang_hessian_terms(const MapJet& u, const FieldJet& v, std::span<double> out) {
  const Eigen::Index m = u.d.cols();
  const Eigen::VectorXd tau = u.lap + u.G * u.v;
  const double v2 = v.v.squaredNorm();
  const double tau_v = tau.dot(v.v);

  const Eigen::VectorXd t1 = v.lap - u.v.dot(v.lap) * u.v + u.G * v.v;
  out[0] = t1.squaredNorm();
  out[1] = tau.squaredNorm() * v2 - tau_v * tau_v;

  double t3 = 0, t4 = 0;
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto du = u.d.col(i);
    const double du_v = du.dot(v.v);
    const Eigen::VectorXd nabla_tau = u.dlap.col(i) + u.dG[i] * u.v + u.G * du + du.dot(tau) * u.v;
    t3 += v.v.dot(nabla_tau) * du_v - du.dot(nabla_tau) * v2;
    const Eigen::VectorXd nabla_v = v.d.col(i) + du_v * u.v;
    t4 += tau.dot(nabla_v) * du_v - du.dot(nabla_v) * tau_v;
  }
  out[2] = -2 * t3;
  out[3] = -2 * t4;
}

void p_energy_terms(double p, const MapJet& u, const FieldJet& eta, std::span<double> out) {
  const double g = u.G;
  const double cross = grad_pairing(u, eta);
  out[0] = std::pow(g, 0.5 * (p - 2)) * (eta.d.squaredNorm() - g * eta.v.squaredNorm());
  out[1] = p == 2 ? 0.0 : (p - 2) * std::pow(g, 0.5 * (p - 4)) * cross * cross;
}

void hardy_terms(const MapJet& u, const FieldJet& eta, std::span<double> out) {
  out[0] = eta.lap.squaredNorm();
  out[1] = eta.d.squaredNorm() / (u.r * u.r);
}

void weak_residual_terms(const MapJet& q, const FieldJet& phi, std::span<double> out) {
  out[0] = q.lap.dot(phi.lap);
  out[1] = -2 * q.G * grad_pairing(q, phi);
  out[2] = -(q.bilap.dot(q.v) - 2 * q.G * q.G) * q.v.dot(phi.v);
}

void bitension_terms(const MapJet& q, const FieldJet& v, std::span<double> out) {
  out[0] = q.bilap.dot(v.v);
  out[1] = 2 * (q.d * q.dG).dot(v.v);
  out[2] = 2 * q.G * q.lap.dot(v.v);
  out[3] = -(q.bilap.dot(q.v) - 2 * q.G * q.G) * q.v.dot(v.v);
}

double normalized_bienergy_density(const Eigen::VectorXd& w, const Eigen::MatrixXd& dw,
                                   const Eigen::VectorXd& lapw) {
  const double n = w.norm();
  const Eigen::VectorXd dn = (dw.transpose() * w) / n;
  const double dn2 = dn.squaredNorm();
  const double lapn = (w.dot(lapw) + dw.squaredNorm() - dn2) / n;
  const Eigen::MatrixXd du = dw / n - w * dn.transpose() / (n * n);
  const Eigen::VectorXd lapu =
      lapw / n - 2 * (dw * dn) / (n * n) + w * (-lapn / (n * n) + 2 * dn2 / (n * n * n));
  const double g = du.squaredNorm();
  return 0.5 * (lapu.squaredNorm() - g * g);
}

double normalized_bienergy_density_gram(const Eigen::Ref<const Eigen::MatrixXd>& G) {
  const Eigen::Index m = G.rows() - 2;
  const double n2 = G(0, 0);
  const double n = std::sqrt(n2);
  double dn2 = 0, trace = 0, g = 0;
  for (Eigen::Index j = 1; j <= m; ++j) {
    const double dn = G(0, j) / n;
    dn2 += dn * dn;
    trace += G(j, j);
    g += G(j, j) / n2 - 2 * dn * G(0, j) / (n2 * n) + dn * dn / n2;
  }
  const double lapn = (G(0, m + 1) + trace - dn2) / n;
  // Lap(w/n) = a_0 w + sum_j a_j d_j w + a_{m+1} Lap w
  const auto a = [&](Eigen::Index i) {
    if (i == 0) return -lapn / n2 + 2 * dn2 / (n2 * n);
    if (i == m + 1) return 1 / n;
    return -2 * G(0, i) / (n2 * n);
  };
  double lap2 = 0;
  for (Eigen::Index i = 0; i < m + 2; ++i) {
    const double ai = a(i);
    double row = 0;
    for (Eigen::Index j = 0; j < m + 2; ++j) row += G(i, j) * a(j);
    lap2 += ai * row;
  }
  return 0.5 * (lap2 - g * g);
}

}  // namespace biharm
