#include "biharm/quadrature.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <thread>

namespace biharm {

DivergentIntegral::DivergentIntegral(int m, int radial_order)
    : std::runtime_error("DivergentIntegral: radial order " + std::to_string(radial_order) +
                         " is not integrable at the origin in dimension " + std::to_string(m)),
      m_(m),
      order_(radial_order) {}

double sphere_volume(int m) {
  if (m < 1) throw std::invalid_argument("sphere_volume: m must be positive");
  return 2.0 * std::pow(std::numbers::pi, 0.5 * m) / std::tgamma(0.5 * m);
}

namespace {

// Golub-Welsch for a symmetric Jacobi matrix with zero diagonal.
Rule1D golub_welsch(const Eigen::VectorXd& offdiag, double mu0) {
  const int n = static_cast<int>(offdiag.size()) + 1;
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) J(i, i + 1) = J(i + 1, i) = offdiag[i];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  Rule1D rule;
  rule.nodes = es.eigenvalues();
  rule.weights = mu0 * es.eigenvectors().row(0).transpose().array().square();
  // symmetrize: the weight is even, so nodes come in +- pairs
  for (int i = 0; i < n / 2; ++i) {
    const int k = n - 1 - i;
    const double x = 0.5 * (rule.nodes[k] - rule.nodes[i]);
    const double w = 0.5 * (rule.weights[k] + rule.weights[i]);
    rule.nodes[i] = -x;
    rule.nodes[k] = x;
    rule.weights[i] = rule.weights[k] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

}  // namespace

Rule1D gauss_legendre(int n) { return gauss_gegenbauer(n, 0.0); }

Rule1D gauss_gegenbauer(int n, double a) {
  if (n < 1) throw std::invalid_argument("gauss_gegenbauer: n must be positive");
  if (a < 0) throw std::invalid_argument("gauss_gegenbauer: exponent must be non-negative");
  // Jacobi polynomials with alpha = beta = a.
  Eigen::VectorXd b(n - 1);
  for (int k = 1; k < n; ++k) {
    const double s = 2 * k + 2 * a;
    b[k - 1] = std::sqrt(4.0 * k * (k + a) * (k + a) * (k + 2 * a) / (s * s * (s + 1) * (s - 1)));
  }
  const double mu0 = std::sqrt(std::numbers::pi) * std::tgamma(a + 1) / std::tgamma(a + 1.5);
  Rule1D rule = golub_welsch(b, mu0);
  if (n == 1) {
    rule.nodes.setZero();
    rule.weights.setConstant(mu0);
  }
  return rule;
}

Rule1D radial_rule(double a, double b, int nodes_per_panel, std::span<const double> breakpoints,
                   bool graded) {
  if (!(a >= 0 && a < b)) throw std::invalid_argument("radial_rule: need 0 <= a < b");
  std::vector<double> ends = {a, b};
  if (a == 0 && graded) {
    for (double t = 0.5 * b; t > 1e-18; t *= 0.5) ends.push_back(t);
  }
  for (double t : breakpoints)
    if (t > a && t < b) ends.push_back(t);
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());

  const Rule1D gl = gauss_legendre(nodes_per_panel);
  const std::size_t panels = ends.size() - 1;
  Rule1D out;
  out.nodes.resize(static_cast<Eigen::Index>(panels * nodes_per_panel));
  out.weights.resize(out.nodes.size());
  Eigen::Index k = 0;
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = ends[p];
    const double hi = ends[p + 1];
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    for (int i = 0; i < nodes_per_panel; ++i, ++k) {
      out.nodes[k] = mid + half * gl.nodes[i];
      out.weights[k] = half * gl.weights[i];
    }
  }
  return out;
}

void check_radial_order(int m, int radial_order, double a) {
  if (a == 0 && m - radial_order <= 0) throw DivergentIntegral(m, radial_order);
}

double radial_integral(const RadialIntegrand& h, int m, const QuadratureSpec& spec) {
  check_radial_order(m, h.radial_order, spec.a);
  const Rule1D rule = radial_rule(spec.a, spec.b, spec.radial_nodes, h.breakpoints);
  double acc = 0;
  for (Eigen::Index i = 0; i < rule.nodes.size(); ++i) {
    const double r = rule.nodes[i];
    acc += rule.weights[i] * h.h(r) * std::pow(r, m - 1);
  }
  return sphere_volume(m) * acc;
}

SphereRule product_sphere_rule(int m, int n) {
  if (m < 2) throw std::invalid_argument("product_sphere_rule: m must be at least 2");
  if (n < 1) throw std::invalid_argument("product_sphere_rule: n must be positive");
  // y_1 = t_1, y_2 = s_1 t_2, ..., y_{m-1} = s_1..s_{m-2} cos(phi), y_m = s_1..s_{m-2} sin(phi)
  std::vector<Rule1D> polar;
  for (int k = 1; k <= m - 2; ++k) polar.push_back(gauss_gegenbauer(n, 0.5 * (m - 2 - k)));
  const int nphi = 2 * n;

  std::size_t count = nphi;
  for (int k = 0; k < m - 2; ++k) count *= static_cast<std::size_t>(n);
  SphereRule rule;
  rule.points.resize(static_cast<Eigen::Index>(count), m);
  rule.weights.resize(static_cast<Eigen::Index>(count));
  rule.exactness = 2 * n - 1;

  std::vector<int> digit(m - 2, 0);
  for (std::size_t p = 0; p < count; ++p) {
    std::size_t rest = p;
    const int jphi = static_cast<int>(rest % nphi);
    rest /= nphi;
    for (int k = m - 3; k >= 0; --k) {
      digit[k] = static_cast<int>(rest % n);
      rest /= n;
    }
    double prod = 1.0;
    double w = 2.0 * std::numbers::pi / nphi;
    for (int k = 0; k < m - 2; ++k) {
      const double t = polar[k].nodes[digit[k]];
      rule.points(static_cast<Eigen::Index>(p), k) = prod * t;
      prod *= std::sqrt(std::max(0.0, 1.0 - t * t));
      w *= polar[k].weights[digit[k]];
    }
    const double phi = std::numbers::pi * (2 * jphi + 1) / nphi;
    rule.points(static_cast<Eigen::Index>(p), m - 2) = prod * std::cos(phi);
    rule.points(static_cast<Eigen::Index>(p), m - 1) = prod * std::sin(phi);
    rule.weights[static_cast<Eigen::Index>(p)] = w;
  }
  return rule;
}

SphereRule sphere_rule_for_degree(int m, int degree) {
  const int n = std::max(1, (degree + 2) / 2);
  return product_sphere_rule(m, n);
}

double sphere_monomial_integral(std::span<const int> alpha) {
  double lg = 0;
  int total = 0;
  for (int a : alpha) {
    if (a % 2 != 0) return 0.0;
    lg += std::lgamma(0.5 * (a + 1));
    total += a;
  }
  lg -= std::lgamma(0.5 * (total + static_cast<int>(alpha.size())));
  return 2.0 * std::exp(lg);
}

namespace {

std::uint64_t splitmix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t CounterRng::bits(std::uint64_t stream, std::uint64_t counter) const {
  return splitmix(splitmix(splitmix(seed_) ^ stream) ^ counter);
}

double CounterRng::uniform(std::uint64_t stream, std::uint64_t counter) const {
  return (static_cast<double>(bits(stream, counter) >> 11) + 0.5) * 0x1.0p-53;
}

int worker_count() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* cap = std::getenv("BIHARMONIC_ATLAS_THREADS")) {
    const int c = std::atoi(cap);
    if (c >= 1) n = std::min(n, c);
  }
  return n;
}

void parallel_chunks(int n_chunks, const std::function<void(int)>& body) {
  const int workers = std::min(worker_count(), n_chunks);
  if (workers <= 1) {
    for (int c = 0; c < n_chunks; ++c) body(c);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int c = next++; c < n_chunks; c = next++) body(c);
    });
  for (auto& t : pool) t.join();
}

std::vector<McEstimate> ball_integral_mc_terms(
    const std::function<void(std::span<const double>, std::span<double>)>& f, int n_terms, int m,
    const QuadratureSpec& spec) {
  if (spec.mc_samples < 2) throw std::invalid_argument("ball_integral_mc: need at least 2 samples");
  constexpr std::int64_t kChunk = 4096;
  const std::int64_t n = spec.mc_samples;
  const int n_chunks = static_cast<int>((n + kChunk - 1) / kChunk);
  std::vector<double> sum(static_cast<std::size_t>(n_chunks) * n_terms, 0.0);
  std::vector<double> sum2(sum.size(), 0.0);
  const CounterRng rng(spec.rng_seed);
  const double am = std::pow(spec.a, m);
  const double bm = std::pow(spec.b, m);

  parallel_chunks(n_chunks, [&](int c) {
    std::vector<double> x(m);
    std::vector<double> vals(n_terms);
    const std::int64_t lo = c * kChunk;
    const std::int64_t hi = std::min(n, lo + kChunk);
    for (std::int64_t s = lo; s < hi; ++s) {
      // stream 0: direction via Box-Muller pairs; stream 1: radius
      double norm2 = 0;
      for (int i = 0; i < m; i += 2) {
        const std::uint64_t ctr = static_cast<std::uint64_t>(s) * static_cast<std::uint64_t>(m + 1) + i;
        const double u1 = rng.uniform(0, ctr);
        const double u2 = rng.uniform(0, ctr + 1);
        const double rad = std::sqrt(-2.0 * std::log(u1));
        x[i] = rad * std::cos(2 * std::numbers::pi * u2);
        if (i + 1 < m) x[i + 1] = rad * std::sin(2 * std::numbers::pi * u2);
      }
      for (double v : x) norm2 += v * v;
      const double r = std::pow(am + rng.uniform(1, static_cast<std::uint64_t>(s)) * (bm - am), 1.0 / m);
      const double scale = r / std::sqrt(norm2);
      for (double& v : x) v *= scale;
      f(x, vals);
      for (int t = 0; t < n_terms; ++t) {
        sum[static_cast<std::size_t>(c) * n_terms + t] += vals[t];
        sum2[static_cast<std::size_t>(c) * n_terms + t] += vals[t] * vals[t];
      }
    }
  });

  const double volume = sphere_volume(m) * (bm - am) / m;
  std::vector<McEstimate> out(n_terms);
  for (int t = 0; t < n_terms; ++t) {
    double s1 = 0, s2 = 0;
    for (int c = 0; c < n_chunks; ++c) {
      s1 += sum[static_cast<std::size_t>(c) * n_terms + t];
      s2 += sum2[static_cast<std::size_t>(c) * n_terms + t];
    }
    const double mean = s1 / n;
    const double var = std::max(0.0, (s2 / n - mean * mean) * n / (n - 1));
    out[t].estimate = volume * mean;
    out[t].standard_error = volume * std::sqrt(var / n);
  }
  return out;
}

McEstimate ball_integral_mc(const std::function<double(std::span<const double>)>& f, int m,
                            const QuadratureSpec& spec) {
  return ball_integral_mc_terms([&](std::span<const double> x, std::span<double> v) { v[0] = f(x); },
                                1, m, spec)[0];
}

}  // namespace biharm
