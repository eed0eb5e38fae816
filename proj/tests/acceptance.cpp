// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "biharm/atlas.hpp"
#include "biharm/bienergy.hpp"
#include "biharm/hessian.hpp"
#include "biharm/identities.hpp"

using namespace biharm;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

Outcome identities() {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  int checks = 0;
  for (auto [m, ell] : {std::pair{2, 2}, {3, 2}, {3, 3}, {4, 2}, {5, 2}, {6, 3}}) {
    const auto rep = verify_identities(m, ell, 3);
    for (const auto& c : rep.checks) {
      ++checks;
      if (!c.passed) {
        o.pass = false;
        o.detail += " failed " + c.name + " at (" + std::to_string(m) + "," + std::to_string(ell) + ")";
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= 60) o.pass = false;
  o.detail = std::to_string(checks) + " exact checks, " + fmt("%.2fs", secs) + o.detail;
  return o;
}

Outcome angle() {
  Outcome o;
  o.pass = solve_alpha(5, 1) == Rational(3, 4) && solve_alpha(6, 1) == Rational(9, 10) && !solve_alpha(7, 1);
  for (int ell = 1; ell <= 4; ++ell) o.pass = o.pass && !solve_alpha(4, ell);
  o.detail = "(5,1) -> 3/4, (6,1) -> 9/10, (7,1) and (4,1..4) -> none";
  return o;
}

Outcome sobolev() {
  constexpr double pi = std::numbers::pi;
  Outcome o;
  const auto rep = sobolev_report(5, 1, QuadratureSpec{});
  const double e1 = std::abs(rep.dirichlet / (8 * pi * pi / 3) - 1);
  const double e2 = std::abs(rep.bilaplacian_l2 / (32 * pi * pi) - 1);
  o.pass = e1 <= 1e-10 && e2 <= 1e-10;

  QuadratureSpec ann;
  ann.a = 0.05;
  ann.b = 0.95;
  const auto exact = sobolev_report(5, 1, ann);
  const auto mc = sobolev_mc(DeformedMap::critical(5, 1), ann);
  const double z1 = std::abs(mc[0].estimate - exact.dirichlet) / mc[0].standard_error;
  const double z2 = std::abs(mc[1].estimate - exact.bilaplacian_l2) / mc[1].standard_error;
  o.pass = o.pass && z1 <= 3 && z2 <= 3;

  bool diverges = false;
  try {
    sobolev_report(4, 1, QuadratureSpec{});
  } catch (const DivergentIntegral&) {
    diverges = true;
  }
  o.pass = o.pass && diverges;
  o.detail = "quadrature rel err " + fmt("%.1e", std::max(e1, e2)) + ", MC z-scores " + fmt("%.2f", z1) + "/" +
             fmt("%.2f", z2) + ", (4,1) " + (diverges ? "diverges" : "DOES NOT diverge");
  return o;
}

Outcome residual() {
  Outcome o;
  double worst_crit = 0, worst_wrong = 1e300;
  for (auto [m, ell] : {std::pair{5, 1}, {5, 2}}) {
    const DeformedMap q = DeformedMap::critical(m, ell);
    for (const auto& phi : standard_residual_fields(q)) {
      const auto r = weak_residual(q, phi, QuadratureSpec{});
      worst_crit = std::max(worst_crit, std::abs(r.value) / r.largest_term);
    }
    const double s = solve_alpha(m, ell)->get_d();
    for (double ds : {-0.1, 0.1}) {
      const DeformedMap p(m, ell, s + ds);
      for (const auto& phi : standard_residual_fields(p)) {
        const auto r = weak_residual(p, phi, QuadratureSpec{});
        worst_wrong = std::min(worst_wrong, std::abs(r.value) / r.largest_term);
      }
    }
  }
  o.pass = worst_crit <= 1e-6 && worst_wrong > 1e-3;
  o.detail = "critical max |res|/term " + fmt("%.1e", worst_crit) + " (<= 1e-6), perturbed min " +
             fmt("%.1e", worst_wrong) + " (> 1e-3)";
  return o;
}

Outcome hessian() {
  Outcome o;
  double jiang = 0, fd = 0, scaling = 0;
  int n = 0;
  for (auto [m, ell] : {std::pair{5, 1}, {6, 1}, {5, 2}}) {
    const DeformedMap q = DeformedMap::critical(m, ell);
    for (const auto& eta : standard_hessian_fields(q)) {
      ++n;
      const double h = hessian_sphere_form(q, eta, QuadratureSpec{}).sphere_form;
      const double j = hessian_jiang_form(q, eta, QuadratureSpec{});
      const FdResult d = hessian_fd_oracle(q, eta, 1e-2, QuadratureSpec{});
      const double h2 = hessian_sphere_form(q, eta.scaled(2.0), QuadratureSpec{}).sphere_form;
      jiang = std::max(jiang, std::abs(h - j) / std::abs(j));
      fd = std::max(fd, std::max(std::abs(h - d.value), std::abs(j - d.value)) / d.error);
      scaling = std::max(scaling, std::abs(h2 - 4 * h) / std::abs(4 * h));
    }
  }
  o.pass = jiang <= 1e-8 && fd <= 1 && scaling <= 1e-10;
  o.detail = std::to_string(n) + " fields: sphere/jiang rel " + fmt("%.1e", jiang) + ", max |H - FD|/err " +
             fmt("%.2f", fd) + ", H(2eta)/4H rel " + fmt("%.1e", scaling);
  return o;
}

Outcome hardy() {
  Outcome o;
  int violations = 0, n = 0;
  double slack = 1e300;
  Eigen::VectorXd w = Eigen::VectorXd::Zero(2);
  w[0] = 1;
  for (int m = 5; m <= 12; ++m)
    for (const auto& f : standard_hardy_profiles()) {
      ++n;
      const double r = hardy_ratio(TestField::radial_scalar(m, w, f), QuadratureSpec{});
      slack = std::min(slack, r / (m * m / 4.0) - 1);
      if (!(r > m * m / 4.0)) ++violations;
    }
  o.pass = violations == 0;
  o.detail = std::to_string(n) + " ratios, " + std::to_string(violations) + " violations, min relative slack " +
             fmt("%.3g", slack);
  return o;
}

Outcome thresholds() {
  Outcome o;
  o.pass = threshold(1) == 33 && threshold(2) == 46 && threshold(3) == 59;
  for (int ell = 1; ell <= 10; ++ell) o.pass = o.pass && threshold(ell) == margin_threshold(ell);
  o.detail = "33/46/59, root-equivalence for ell = 1..10";
  return o;
}

Outcome stability() {
  Outcome o;
  std::string d;
  for (auto [m, ell] : {std::pair{5, 1}, {6, 1}, {5, 2}, {5, 3}}) {
    const auto nd = find_negative_direction(m, ell, 24, 0.01, QuadratureSpec{});
    o.pass = o.pass && nd.profile.has_value();
    d += "(" + std::to_string(m) + "," + std::to_string(ell) + ")" + fmt(" %.3g ", nd.rayleigh.minimum);
  }
  d += "| ";
  for (auto [m, ell] : {std::pair{33, 1}, {46, 2}, {59, 3}}) {
    const double margin = m * m / 4.0 - 3.0 * angle_numerator(m, ell);
    const auto r = sufficient_rayleigh_minimum(m, ell, 24, 0.01, QuadratureSpec{});
    o.pass = o.pass && r.minimum > 0 && margin > 0;
    if (solve_alpha(m, ell)) {
      const auto nd = find_negative_direction(m, ell, 24, 0.01, QuadratureSpec{});
      o.pass = o.pass && !nd.profile && nd.rayleigh.minimum > 0;
    }
    d += "(" + std::to_string(m) + "," + std::to_string(ell) + ")" + fmt(" min %.3g", r.minimum) +
         fmt(" margin %.2f", margin) + " ";
  }
  o.detail = d.substr(0, d.find_last_not_of(" ") + 1);
  return o;
}

Outcome first_variation() {
  Outcome o;
  double crit = 0, agree = 0, smallest = 1e300;
  const DeformedMap q = DeformedMap::critical(5, 1);
  const DeformedMap p(5, 1, 0.85);
  for (const auto& v : standard_residual_fields(q)) {
    const auto r = first_variation_check(q, v, QuadratureSpec{});
    crit = std::max(crit, std::max(std::abs(r.lhs), std::abs(r.rhs)) / r.term_scale);
  }
  for (const auto& v : standard_residual_fields(p)) {
    const auto r = first_variation_check(p, v, QuadratureSpec{});
    agree = std::max(agree, std::abs(r.lhs - r.rhs) / std::abs(r.rhs));
    smallest = std::min(smallest, std::min(std::abs(r.lhs), std::abs(r.rhs)) / r.term_scale);
  }
  o.pass = crit <= 1e-6 && agree <= 0.01 && smallest > 0;
  o.detail = "critical max/scale " + fmt("%.1e", crit) + ", perturbed lhs/rhs rel diff " + fmt("%.1e", agree) +
             ", min |value|/scale " + fmt("%.2g", smallest);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"exact identity suite", identities},
      {"angle equation", angle},
      {"sobolev integrals", sobolev},
      {"weak residual", residual},
      {"hessian cross-validation", hessian},
      {"hardy suite", hardy},
      {"stability thresholds", thresholds},
      {"stability/instability reproduction", stability},
      {"first-variation consistency", first_variation},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s  %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
