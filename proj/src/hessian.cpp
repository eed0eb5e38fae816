#include "biharm/hessian.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "biharm/kernels.hpp"

namespace biharm {

NonTangentField::NonTangentField(double violation)
    : std::invalid_argument("variation is not tangent to the map (|<eta, u>| = " + std::to_string(violation) + ")"),
      violation_(violation) {}

const std::array<std::string, 5>& sphere_term_names() {
  static const std::array<std::string, 5> names = {"lap_eta", "grad4_eta", "bilap_eta", "gradgrad_eta",
                                                   "cross"};
  return names;
}

namespace {

constexpr double kTangencyTol = 1e-10;
constexpr int kFdRadialNodes = 24;

void check_tangent(const DeformedMap& u, const TestField& eta, const SphereRule& rule) {
  if (!eta.tangent()) throw NonTangentField(std::numeric_limits<double>::infinity());
  if (eta.components() != u.components()) throw std::invalid_argument("variation has the wrong size");
  const Eigen::Index n = std::min<Eigen::Index>(rule.weights.size(), 64);
  const Eigen::Index stride = std::max<Eigen::Index>(1, rule.weights.size() / n);
  std::vector<double> y(u.dim());
  for (Eigen::Index p = 0; p < rule.weights.size(); p += stride) {
    for (int i = 0; i < u.dim(); ++i) y[i] = rule.points(p, i);
    const Eigen::VectorXd qv = u.jet(y, 1.0).v;
    const Eigen::VectorXd phi = eta.angular(y).phi;
    const double v = std::abs(qv.dot(phi));
    if (v > kTangencyTol * std::max(1.0, phi.norm())) throw NonTangentField(v);
  }
}

std::string describe(const SphereRule& rule) {
  if (rule.weights.size() == 1) return "single_direction";
  return "product_gauss(nodes=" + std::to_string(rule.weights.size()) +
         ",exact_degree=" + std::to_string(rule.exactness) + ")";
}

std::vector<double> quadratic_terms(const DeformedMap& u, const TestField& eta, const JetKernel& kernel,
                                    int n_terms, double sigma, const QuadratureSpec& spec, AngularMode mode,
                                    std::string* label, std::vector<double>* se = nullptr) {
  if (mode == AngularMode::MonteCarlo) {
    check_tangent(u, eta, single_direction_rule(u.dim()));
    std::vector<double> out;
    for (const auto& e : integrate_mc(&u, eta, kernel, n_terms, spec)) {
      out.push_back(e.estimate);
      if (se) se->push_back(e.standard_error);
    }
    if (label) *label = "monte_carlo(samples=" + std::to_string(spec.mc_samples) + ")";
    return out;
  }
  const SphereRule rule =
      mode == AngularMode::ProductGauss
          ? sphere_rule_for_degree(u.dim(), 4 * u.max_degree() + 2 * eta.angular_degree() + 2)
          : angular_rule(&u, eta);
  check_tangent(u, eta, rule);
  if (label) *label = describe(rule);
  return integrate_quadratic(&u, eta, kernel, n_terms, sigma, spec, rule);
}

}  // namespace

HessianReport hessian_sphere_form(const DeformedMap& u, const TestField& eta, const QuadratureSpec& spec,
                                  AngularMode mode) {
  HessianReport rep;
  std::vector<double> se;
  const auto t = quadratic_terms(u, eta, sphere_hessian_terms, kSphereTerms, 0.0, spec, mode, &rep.quadrature, &se);
  for (int i = 0; i < kSphereTerms; ++i) {
    rep.margin_terms[sphere_term_names()[i]] = t[i];
    rep.sphere_form += t[i];
  }
  rep.sufficient_form = t[0] + t[1] + t[2] + 3 * t[3];
  if (!se.empty()) {
    // terms share samples; the total's error is estimated from their sum.
    auto tot = integrate_mc(
        &u, eta,
        [](const MapJet& a, const FieldJet& b, std::span<double> out) {
          double buf[kSphereTerms];
          sphere_hessian_terms(a, b, buf);
          out[0] = std::accumulate(buf, buf + kSphereTerms, 0.0);
        },
        1, spec);
    rep.sphere_form_se = tot[0].standard_error;
  }
  return rep;
}

double hessian_jiang_form(const DeformedMap& u, const TestField& eta, const QuadratureSpec& spec,
                          AngularMode mode) {
  const auto t = quadratic_terms(u, eta, jiang_hessian_terms, kJiangTerms, 0.0, spec, mode, nullptr);
  return std::accumulate(t.begin(), t.end(), 0.0);
}

McEstimate sphere_minus_jiang_mc(const DeformedMap& u, const TestField& eta, const QuadratureSpec& spec) {
  check_tangent(u, eta, single_direction_rule(u.dim()));
  return integrate_mc(
      &u, eta,
      [](const MapJet& a, const FieldJet& b, std::span<double> out) {
        double s[kSphereTerms], j[kJiangTerms];
        sphere_hessian_terms(a, b, s);
        jiang_hessian_terms(a, b, j);
        out[0] = std::accumulate(s, s + kSphereTerms, 0.0) - std::accumulate(j, j + kJiangTerms, 0.0);
      },
      1, spec)[0];
}

double p_energy_hessian(const DeformedMap& u, const TestField& eta, double p, const QuadratureSpec& spec,
                        AngularMode mode) {
  if (p < 2) throw std::invalid_argument("p_energy_hessian: p must be at least 2");
  const auto t = quadratic_terms(
      u, eta, [p](const MapJet& a, const FieldJet& b, std::span<double> out) { p_energy_terms(p, a, b, out); },
      kPEnergyTerms, 4.0 - p, spec, mode, nullptr);
  return t[0] + t[1];
}

double sufficient_condition_value(const DeformedMap& u, const TestField& eta, const QuadratureSpec& spec) {
  return hessian_sphere_form(u, eta, spec).sufficient_form;
}

namespace {

struct FdSums {
  std::array<double, 3> second{};
  std::array<double, 3> first{};
  double base_abs = 0;
};

FdSums fd_sums(const DeformedMap& u, const TestField& eta, double h, const QuadratureSpec& spec) {
  const RadialProfile& f = eta.profile();
  const SphereRule rule = angular_rule(&u, eta);
  check_tangent(u, eta, rule);
  const double lo = std::max(spec.a, f.support_lo());
  const double hi = std::min(spec.b, f.support_hi());
  FdSums total;
  if (lo >= hi || f.is_zero()) return total;
  const bool graded = lo == 0 && f.order_at_zero() < 2;
  // the projected density is smooth in r; a short rule per panel suffices
  const Rule1D radial = radial_rule(lo, hi, std::min(spec.radial_nodes, kFdRadialNodes), f.breakpoints(), graded);
  const int m = u.dim();

  std::vector<Eigen::Vector3d> fr(radial.nodes.size());
  std::vector<double> rw(radial.nodes.size());
  for (Eigen::Index k = 0; k < radial.nodes.size(); ++k) {
    fr[k] = f.eval(radial.nodes[k]);
    rw[k] = radial.weights[k] * std::pow(radial.nodes[k], m - 1);
  }

  const Eigen::Index n = rule.weights.size();
  constexpr Eigen::Index kChunk = 64;
  const int chunks = static_cast<int>((n + kChunk - 1) / kChunk);
  std::vector<FdSums> partial(chunks);
  parallel_chunks(chunks, [&](int c) {
    std::vector<double> y(m);
    FdSums& acc = partial[c];
    Eigen::MatrixXd S(2 * m + 4, 2 * m + 4), T(m + 2, 2 * m + 4);
    Eigen::MatrixXd G0(m + 2, m + 2), G1(m + 2, m + 2), G2(m + 2, m + 2), Gt(m + 2, m + 2);
    Eigen::VectorXd scale(m + 2);
    for (Eigen::Index p = c * kChunk; p < std::min(n, (c + 1) * kChunk); ++p) {
      for (int i = 0; i < m; ++i) y[i] = rule.points(p, i);
      const MapJet unit = u.jet(y, 1.0);
      const AngularJet a = eta.angular(y);
      // Every jet below is a combination of these columns.
      Eigen::MatrixXd X(unit.v.size(), 2 * m + 4);
      X.col(0) = unit.v;
      X.middleCols(1, m) = unit.d;
      X.col(m + 1) = unit.lap;
      X.col(m + 2) = a.phi;
      X.middleCols(m + 3, m) = a.dphi;
      X.col(2 * m + 3) = a.lapphi;
      S.noalias() = X.transpose() * X;
      for (Eigen::Index k = 0; k < radial.nodes.size(); ++k) {
        const double r = radial.nodes[k];
        const double w = rule.weights[p] * rw[k];
        const Eigen::Vector3d& fv = fr[k];
        // base rows scale by 1, 1/r, 1/r^2; eta rows are sparse in the angular columns
        scale[0] = 1;
        for (int j = 1; j <= m; ++j) scale[j] = 1 / r;
        scale[m + 1] = 1 / (r * r);
        const double lapc = fv[2] + (m - 1) * fv[1] / r;
        const auto eta_row = [&](int i, int c) {  // <eta_i, column c of X>
          const int P = m + 2, D = m + 3, Q = 2 * m + 3;
          if (i == 0) return fv[0] * S(P, c);
          if (i <= m) return fv[1] * y[i - 1] * S(P, c) + fv[0] / r * S(D + i - 1, c);
          double v = lapc * S(P, c) + fv[0] / (r * r) * S(Q, c);
          for (int j = 0; j < m; ++j) v += 2 * fv[1] / r * y[j] * S(D + j, c);
          return v;
        };
        for (int i = 0; i < m + 2; ++i)
          for (int c = 0; c < 2 * m + 4; ++c) T(i, c) = eta_row(i, c);
        for (int i = 0; i < m + 2; ++i)
          for (int j = 0; j < m + 2; ++j) {
            G0(i, j) = scale[i] * scale[j] * S(i, j);
            G1(i, j) = scale[i] * T(j, i) + scale[j] * T(i, j);
          }
        // G2(i, j) = <eta_i, eta_j>, from T through the same sparse rows
        for (int i = 0; i < m + 2; ++i) {
          const int P = m + 2, D = m + 3, Q = 2 * m + 3;
          for (int j = 0; j < m + 2; ++j) {
            double v;
            if (j == 0) {
              v = fv[0] * T(i, P);
            } else if (j <= m) {
              v = fv[1] * y[j - 1] * T(i, P) + fv[0] / r * T(i, D + j - 1);
            } else {
              v = lapc * T(i, P) + fv[0] / (r * r) * T(i, Q);
              for (int l = 0; l < m; ++l) v += 2 * fv[1] / r * y[l] * T(i, D + l);
            }
            G2(i, j) = v;
          }
        }
        const double e0 = normalized_bienergy_density_gram(G0);
        acc.base_abs += w * std::abs(e0);
        for (int s = 0; s < 3; ++s) {
          const double t = h / (1 << s);
          Gt = G0 + t * G1 + (t * t) * G2;
          const double ep = normalized_bienergy_density_gram(Gt);
          Gt = G0 - t * G1 + (t * t) * G2;
          const double em = normalized_bienergy_density_gram(Gt);
          acc.second[s] += w * (ep + em - 2 * e0) / (t * t);
          acc.first[s] += w * (ep - em) / (2 * t);
        }
      }
    }
  });
  for (const auto& p : partial) {
    for (int s = 0; s < 3; ++s) {
      total.second[s] += p.second[s];
      total.first[s] += p.first[s];
    }
    total.base_abs += p.base_abs;
  }
  return total;
}

// Two Richardson levels for an expansion in even powers of h.
std::pair<double, double> richardson(const std::array<double, 3>& d) {
  const double r1 = (4 * d[1] - d[0]) / 3;
  const double r1b = (4 * d[2] - d[1]) / 3;
  const double r2 = (16 * r1b - r1) / 15;
  return {r2, std::abs(r2 - r1b)};
}

}  // namespace

FdResult hessian_fd_oracle(const DeformedMap& u, const TestField& eta, double h, const QuadratureSpec& spec) {
  if (!(h > 0)) throw std::invalid_argument("hessian_fd_oracle: step must be positive");
  const FdSums s = fd_sums(u, eta, h, spec);
  FdResult out;
  out.raw = s.second;
  const auto [v, e] = richardson(s.second);
  const double eps = std::numeric_limits<double>::epsilon();
  const double hmin = h / 4;
  out.value = v;
  out.error = e + 16 * eps * s.base_abs / (hmin * hmin);
  return out;
}

FirstVariationReport first_variation_check(const DeformedMap& u, const TestField& v, const QuadratureSpec& spec,
                                           double h) {
  FirstVariationReport rep;
  if (v.profile().is_zero()) return rep;
  const RadialProfile& f = v.profile();
  if (!(f.support_lo() > 0 && f.support_hi() < 1))
    throw std::invalid_argument("first_variation_check: V must be supported inside the open annulus");
  const FdSums s = fd_sums(u, v, h, spec);
  const auto [lhs, err] = richardson(s.first);
  const double eps = std::numeric_limits<double>::epsilon();
  rep.lhs = lhs;
  rep.lhs_error = err + 8 * eps * s.base_abs / (h / 4);
  const auto t = integrate_linear(&u, v, bitension_terms, kBitensionTerms, -2.0, spec, angular_rule(&u, v));
  for (int i = 0; i < kBitensionTerms; ++i) {
    rep.rhs_terms[i] = t[i];
    rep.rhs += t[i];
    rep.term_scale = std::max(rep.term_scale, std::abs(t[i]));
  }
  return rep;
}

double hardy_ratio(const TestField& eta, const QuadratureSpec& spec, const DeformedMap* q) {
  if (!eta.equivariant() && q == nullptr)
    throw std::invalid_argument("hardy_ratio: non-equivariant pattern needs the map");
  const SphereRule rule = angular_rule(q, eta);
  const auto t = integrate_quadratic(eta.equivariant() ? nullptr : q, eta, hardy_terms, kHardyTerms, 0.0, spec, rule);
  if (!(t[1] > 0)) throw std::domain_error("hardy_ratio: variation has zero gradient");
  return t[0] / t[1];
}

namespace {

// Assemble sum_ij c_i c_j int J_i^T K(r) J_j w(r) dr over interior B-splines,
// with J = (f, f', f'') and K supplied per node.
template <class KernelAt>
Eigen::MatrixXd spline_gram(const std::vector<double>& knots, int n, int nodes, const KernelAt& kernel) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  const Rule1D gl = gauss_legendre(nodes);
  for (std::size_t p = 0; p + 1 < knots.size(); ++p) {
    const double lo = knots[p], hi = knots[p + 1];
    const int first = std::max(0, static_cast<int>(p) - 3);
    const int last = std::min(n - 1, static_cast<int>(p));
    for (int k = 0; k < nodes; ++k) {
      const double r = 0.5 * (lo + hi) + 0.5 * (hi - lo) * gl.nodes[k];
      const double w = 0.5 * (hi - lo) * gl.weights[k];
      const Eigen::Matrix3d K = kernel(r);
      std::vector<Eigen::Vector3d> J(last - first + 1);
      for (int i = first; i <= last; ++i) J[i - first] = RadialProfile::bspline(knots, i, r);
      for (int i = first; i <= last; ++i)
        for (int j = first; j <= last; ++j) out(i, j) += w * J[i - first].dot(K * J[j - first]);
    }
  }
  return 0.5 * (out + out.transpose());
}

RayleighResult min_pencil(const Eigen::MatrixXd& H, const Eigen::MatrixXd& M) {
  // Jacobi scaling keeps the r^(m-1) weights from wrecking the conditioning.
  const Eigen::VectorXd d = M.diagonal().cwiseSqrt().cwiseInverse();
  const Eigen::MatrixXd Hs = d.asDiagonal() * H * d.asDiagonal();
  const Eigen::MatrixXd Ms = d.asDiagonal() * M * d.asDiagonal();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> mass(Ms);
  RayleighResult out;
  out.condition = mass.eigenvalues().maxCoeff() / mass.eigenvalues().minCoeff();
  if (!(mass.eigenvalues().minCoeff() > 0) || !std::isfinite(out.condition))
    throw std::runtime_error("ill-conditioned pencil (condition " + std::to_string(out.condition) + ")");
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ges(Hs, Ms);
  if (ges.info() != Eigen::Success)
    throw std::runtime_error("ill-conditioned pencil (condition " + std::to_string(out.condition) + ")");
  out.spectrum = ges.eigenvalues();
  out.minimum = out.spectrum[0];
  out.minimizer = d.asDiagonal() * ges.eigenvectors().col(0);
  if (out.minimizer.cwiseAbs().maxCoeff() > 0) out.minimizer /= out.minimizer.cwiseAbs().maxCoeff();
  return out;
}

// Colatitude-shift density as J^T K J; see equivariant_hessian_1d.
Eigen::Matrix3d colatitude_kernel(int m, double L, double K, double s, double r) {
  const double c = 1 - s;
  const double A = s * L, B = s * L * K;
  const double r2 = r * r, r4 = r2 * r2;
  const Eigen::Vector3d t(-L / r2, (m - 1) / r, 1.0);
  const Eigen::Vector3d g(0.0, (m - 1) / r, 1.0);
  Eigen::Matrix3d out = c * t * t.transpose() + s * g * g.transpose();
  out(0, 0) += (2 * A * A - B - 2 * A * c * L - 4 * s * c * L * L) / r4;
  out(1, 1) += -2 * A / r2;
  return out;
}

}  // namespace

double equivariant_hessian_1d(int m, int ell, double s, const RadialProfile& f, const QuadratureSpec& spec) {
  if (f.is_zero()) return 0.0;
  const double L = static_cast<double>(ell_eigenvalue(m, ell));
  const double K = static_cast<double>(angle_numerator(m, ell));
  const RadialIntegrand h{[&](double r) {
                            const Eigen::Vector3d J = f.eval(r);
                            return J.dot(colatitude_kernel(m, L, K, s, r) * J);
                          },
                          f.order_at_zero() >= 0 ? 4 - 2 * f.order_at_zero() : 0, f.breakpoints()};
  QuadratureSpec sub = spec;
  sub.a = std::max(spec.a, f.support_lo());
  sub.b = std::min(spec.b, f.support_hi());
  if (sub.a >= sub.b) return 0.0;
  return radial_integral(h, m, sub);
}

double equivariant_hessian_1d(int m, int ell, const RadialProfile& f, const QuadratureSpec& spec) {
  const auto s = solve_alpha(m, ell);
  if (!s) throw std::domain_error("equivariant_hessian_1d: no proper biharmonic angle");
  return equivariant_hessian_1d(m, ell, s->get_d(), f, spec);
}

NegativeDirection find_negative_direction(int m, int ell, int basis_size, double inner,
                                          const QuadratureSpec& spec) {
  const auto s = solve_alpha(m, ell);
  if (!s) throw std::domain_error("find_negative_direction: no proper biharmonic angle");
  const double sd = s->get_d();
  const double L = static_cast<double>(ell_eigenvalue(m, ell));
  const double K = static_cast<double>(angle_numerator(m, ell));
  const auto knots = RadialProfile::spline_knots(inner, basis_size);
  const double vol = sphere_volume(m);
  const int nodes = std::max(8, spec.radial_nodes);
  const Eigen::MatrixXd H = spline_gram(knots, basis_size, nodes, [&](double r) {
    return Eigen::Matrix3d(vol * std::pow(r, m - 1) * colatitude_kernel(m, L, K, sd, r));
  });
  const Eigen::MatrixXd M = spline_gram(knots, basis_size, nodes, [&](double r) {
    Eigen::Matrix3d k = Eigen::Matrix3d::Zero();
    k(0, 0) = vol * std::pow(r, m - 5);
    return k;
  });
  NegativeDirection out;
  out.rayleigh = min_pencil(H, M);
  if (out.rayleigh.minimum < 0) {
    std::vector<double> c(out.rayleigh.minimizer.data(), out.rayleigh.minimizer.data() + basis_size);
    out.profile = RadialProfile::spline(inner, c);
  }
  return out;
}

RayleighResult hardy_infimum(int m, int basis_size, double inner, const QuadratureSpec& spec) {
  const auto knots = RadialProfile::spline_knots(inner, basis_size);
  const int nodes = std::max(8, spec.radial_nodes);
  const Eigen::MatrixXd N = spline_gram(knots, basis_size, nodes, [&](double r) {
    const Eigen::Vector3d g(0.0, (m - 1) / r, 1.0);
    return Eigen::Matrix3d(std::pow(r, m - 1) * g * g.transpose());
  });
  const Eigen::MatrixXd D = spline_gram(knots, basis_size, nodes, [&](double r) {
    Eigen::Matrix3d k = Eigen::Matrix3d::Zero();
    k(1, 1) = std::pow(r, m - 3);
    return k;
  });
  return min_pencil(N, D);
}

RayleighResult sufficient_rayleigh_minimum(int m, int ell, int basis_size, double inner,
                                           const QuadratureSpec& spec) {
  const double delta = 3.0 * static_cast<double>(angle_numerator(m, ell));
  const auto knots = RadialProfile::spline_knots(inner, basis_size);
  const int nodes = std::max(8, spec.radial_nodes);
  const Eigen::MatrixXd N = spline_gram(knots, basis_size, nodes, [&](double r) {
    const Eigen::Vector3d g(0.0, (m - 1) / r, 1.0);
    Eigen::Matrix3d k = std::pow(r, m - 1) * g * g.transpose();
    k(1, 1) -= delta * std::pow(r, m - 3);
    return k;
  });
  const Eigen::MatrixXd D = spline_gram(knots, basis_size, nodes, [&](double r) {
    Eigen::Matrix3d k = Eigen::Matrix3d::Zero();
    k(1, 1) = std::pow(r, m - 3);
    return k;
  });
  return min_pencil(N, D);
}

}  // namespace biharm
