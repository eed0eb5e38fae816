#include "biharm/integrate.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace biharm {

SphereRule single_direction_rule(int m) {
  SphereRule rule;
  rule.points = Eigen::MatrixXd::Zero(1, m);
  rule.points(0, 0) = 1.0;
  rule.weights = Eigen::VectorXd::Constant(1, sphere_volume(m));
  rule.exactness = 0;
  return rule;
}

SphereRule angular_rule(const DeformedMap* q, const TestField& eta, int extra) {
  if (eta.equivariant()) return single_direction_rule(eta.dim());
  const int dmap = q ? q->max_degree() : 0;
  return sphere_rule_for_degree(eta.dim(), 4 * dmap + 2 * eta.angular_degree() + 2 + extra);
}

Eigen::Vector3d radial_factors(const RadialProfile& f, double r) {
  const Eigen::Vector3d v = f.eval(r);
  return {v[0] / (r * r), v[1] / r, v[2]};
}

MapJet rescale(const MapJet& unit, double r) {
  MapJet j = unit;
  j.r = r;
  const double r2 = r * r;
  j.d /= r;
  j.lap /= r2;
  j.dlap /= r2 * r;
  j.bilap /= r2 * r2;
  j.G /= r2;
  j.dG /= r2 * r;
  return j;
}

namespace {

MapJet empty_jet(std::span<const double> y) {
  MapJet j;
  j.r = 1;
  j.y = Eigen::Map<const Eigen::VectorXd>(y.data(), static_cast<Eigen::Index>(y.size()));
  return j;
}

// Partial sums over fixed node chunks, combined in chunk order.
template <class Acc, class Body>
std::vector<Acc> chunked_nodes(const SphereRule& rule, const Acc& zero, const Body& body) {
  const Eigen::Index n = rule.weights.size();
  constexpr Eigen::Index kChunk = 256;
  const int chunks = static_cast<int>((n + kChunk - 1) / kChunk);
  std::vector<Acc> partial(chunks, zero);
  parallel_chunks(chunks, [&](int c) {
    std::vector<double> y(rule.points.cols());
    for (Eigen::Index p = c * kChunk; p < std::min(n, (c + 1) * kChunk); ++p) {
      for (Eigen::Index i = 0; i < rule.points.cols(); ++i) y[i] = rule.points(p, i);
      body(y, rule.weights[p], partial[c]);
    }
  });
  return partial;
}

}  // namespace

std::vector<Eigen::Matrix3d> angular_quadratic(const DeformedMap* q, const TestField& eta,
                                               const JetKernel& kernel, int n_terms,
                                               const SphereRule& rule) {
  using Acc = std::vector<Eigen::Matrix3d>;
  const Acc zero(n_terms, Eigen::Matrix3d::Zero());
  auto partial = chunked_nodes(rule, zero, [&](std::span<const double> y, double w, Acc& acc) {
    const MapJet mj = q ? q->jet(y, 1.0) : empty_jet(y);
    const AngularJet a = eta.angular(y);
    std::vector<double> diag(3 * n_terms), buf(n_terms);
    for (int k = 0; k < 3; ++k) {
      kernel(mj, eta.jet(a, y, 1.0, Eigen::Vector3d::Unit(k)), std::span<double>(diag.data() + k * n_terms, n_terms));
    }
    for (int t = 0; t < n_terms; ++t)
      for (int k = 0; k < 3; ++k) acc[t](k, k) += w * diag[k * n_terms + t];
    for (int k = 0; k < 3; ++k)
      for (int l = k + 1; l < 3; ++l) {
        kernel(mj, eta.jet(a, y, 1.0, Eigen::Vector3d::Unit(k) + Eigen::Vector3d::Unit(l)), buf);
        for (int t = 0; t < n_terms; ++t) {
          const double off = 0.5 * (buf[t] - diag[k * n_terms + t] - diag[l * n_terms + t]);
          acc[t](k, l) += w * off;
          acc[t](l, k) += w * off;
        }
      }
  });
  Acc out = zero;
  for (const auto& p : partial)
    for (int t = 0; t < n_terms; ++t) out[t] += p[t];
  return out;
}

std::vector<Eigen::Vector3d> angular_linear(const DeformedMap* q, const TestField& eta,
                                            const JetKernel& kernel, int n_terms, const SphereRule& rule) {
  using Acc = std::vector<Eigen::Vector3d>;
  const Acc zero(n_terms, Eigen::Vector3d::Zero());
  auto partial = chunked_nodes(rule, zero, [&](std::span<const double> y, double w, Acc& acc) {
    const MapJet mj = q ? q->jet(y, 1.0) : empty_jet(y);
    const AngularJet a = eta.angular(y);
    std::vector<double> buf(n_terms);
    for (int k = 0; k < 3; ++k) {
      kernel(mj, eta.jet(a, y, 1.0, Eigen::Vector3d::Unit(k)), buf);
      for (int t = 0; t < n_terms; ++t) acc[t][k] += w * buf[t];
    }
  });
  Acc out = zero;
  for (const auto& p : partial)
    for (int t = 0; t < n_terms; ++t) out[t] += p[t];
  return out;
}

namespace {

Rule1D profile_rule(const RadialProfile& f, int m, double sigma, const QuadratureSpec& spec, int power) {
  const double lo = std::max(spec.a, f.support_lo());
  const double hi = std::min(spec.b, f.support_hi());
  if (lo >= hi) return Rule1D{Eigen::VectorXd(0), Eigen::VectorXd(0)};
  if (lo == 0) {
    // F_a ~ r^(s-2); the integrand behaves like r^(power (s-2) + m - 1 + sigma).
    const int s = f.order_at_zero();
    const double order = -(power * (s - 2) + sigma);
    if (m - order <= 0) throw DivergentIntegral(m, static_cast<int>(std::ceil(order)));
  }
  return radial_rule(lo, hi, spec.radial_nodes, f.breakpoints());
}

}  // namespace

Eigen::Matrix3d radial_quadratic(const RadialProfile& f, int m, double sigma, const QuadratureSpec& spec) {
  const Rule1D rule = profile_rule(f, m, sigma, spec, 2);
  Eigen::Matrix3d out = Eigen::Matrix3d::Zero();
  for (Eigen::Index i = 0; i < rule.nodes.size(); ++i) {
    const double r = rule.nodes[i];
    const Eigen::Vector3d F = radial_factors(f, r);
    out += rule.weights[i] * std::pow(r, m - 1 + sigma) * (F * F.transpose());
  }
  return out;
}

Eigen::Vector3d radial_linear(const RadialProfile& f, int m, double sigma, const QuadratureSpec& spec) {
  const Rule1D rule = profile_rule(f, m, sigma, spec, 1);
  Eigen::Vector3d out = Eigen::Vector3d::Zero();
  for (Eigen::Index i = 0; i < rule.nodes.size(); ++i) {
    const double r = rule.nodes[i];
    out += rule.weights[i] * std::pow(r, m - 1 + sigma) * radial_factors(f, r);
  }
  return out;
}

std::vector<double> integrate_quadratic(const DeformedMap* q, const TestField& eta, const JetKernel& kernel,
                                        int n_terms, double sigma, const QuadratureSpec& spec,
                                        const SphereRule& rule) {
  std::vector<double> out(n_terms, 0.0);
  if (eta.profile().is_zero()) return out;
  const Eigen::Matrix3d R = radial_quadratic(eta.profile(), eta.dim(), sigma, spec);
  const auto A = angular_quadratic(q, eta, kernel, n_terms, rule);
  for (int t = 0; t < n_terms; ++t) out[t] = A[t].cwiseProduct(R).sum();
  return out;
}

std::vector<double> integrate_linear(const DeformedMap* q, const TestField& eta, const JetKernel& kernel,
                                     int n_terms, double sigma, const QuadratureSpec& spec,
                                     const SphereRule& rule) {
  std::vector<double> out(n_terms, 0.0);
  if (eta.profile().is_zero()) return out;
  const Eigen::Vector3d R = radial_linear(eta.profile(), eta.dim(), sigma, spec);
  const auto A = angular_linear(q, eta, kernel, n_terms, rule);
  for (int t = 0; t < n_terms; ++t) out[t] = A[t].dot(R);
  return out;
}

std::vector<McEstimate> integrate_mc(const DeformedMap* q, const TestField& eta, const JetKernel& kernel,
                                     int n_terms, const QuadratureSpec& spec) {
  const int m = eta.dim();
  return ball_integral_mc_terms(
      [&](std::span<const double> x, std::span<double> out) {
        double r2 = 0;
        for (double v : x) r2 += v * v;
        const double r = std::sqrt(r2);
        std::vector<double> y(x.begin(), x.end());
        for (double& v : y) v /= r;
        const MapJet mj = q ? q->jet(y, r) : [&] {
          MapJet e = empty_jet(y);
          e.r = r;
          return e;
        }();
        kernel(mj, eta.jet(y, r), out);
      },
      n_terms, m, spec);
}

}  // namespace biharm
