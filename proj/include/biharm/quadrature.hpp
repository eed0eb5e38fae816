#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace biharm {

struct QuadratureSpec {
  int radial_nodes = 64;
  std::int64_t mc_samples = 200000;
  std::uint64_t rng_seed = 42;
  double a = 0.0;
  double b = 1.0;
};

/// Thrown when int_a^b h(r) r^(m-1) dr is infinite because a = 0 and
/// m - radial_order <= 0.
class DivergentIntegral : public std::runtime_error {
 public:
  DivergentIntegral(int m, int radial_order);
  int dim() const { return m_; }
  int radial_order() const { return order_; }

 private:
  int m_;
  int order_;
};

/// h(r) with h ~ C r^-radial_order near 0. Breakpoints mark kinks (spline knots).
struct RadialIntegrand {
  std::function<double(double)> h;
  int radial_order = 0;
  std::vector<double> breakpoints;
};

/// 2 pi^(m/2) / Gamma(m/2).
double sphere_volume(int m);

/// Nodes and weights of a 1-D rule.
struct Rule1D {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// n-point Gauss-Legendre on [-1, 1].
Rule1D gauss_legendre(int n);

/// n-point Gauss rule for the weight (1 - t^2)^a on [-1, 1], a >= 0.
Rule1D gauss_gegenbauer(int n, double a);

/// Composite Gauss-Legendre for int_a^b g(r) dr. When a = 0 and `graded` is
/// set the interval is split into geometric panels [2^-(k+1), 2^-k] toward
/// the origin. Extra breakpoints inside (a, b) become panel ends.
Rule1D radial_rule(double a, double b, int nodes_per_panel, std::span<const double> breakpoints = {},
                   bool graded = true);

/// Throws DivergentIntegral when a = 0 and m - radial_order <= 0.
void check_radial_order(int m, int radial_order, double a);

/// sphere_volume(m) * int_a^b h(r) r^(m-1) dr.
double radial_integral(const RadialIntegrand& h, int m, const QuadratureSpec& spec);

/// Product Gauss rule on S^(m-1) in hyperspherical coordinates, exact for
/// polynomials of degree <= 2n - 1. Points are rows of `points`.
struct SphereRule {
  Eigen::MatrixXd points;
  Eigen::VectorXd weights;
  int exactness = 0;
};

SphereRule product_sphere_rule(int m, int n);

/// Smallest product rule exact for the given degree.
SphereRule sphere_rule_for_degree(int m, int degree);

/// int over S^(m-1) of prod y_i^alpha_i (zero when some alpha_i is odd).
double sphere_monomial_integral(std::span<const int> alpha);

/// Counter-based generator: every draw is a pure function of (seed, stream, counter).
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}
  std::uint64_t bits(std::uint64_t stream, std::uint64_t counter) const;
  /// Uniform in (0, 1).
  double uniform(std::uint64_t stream, std::uint64_t counter) const;

 private:
  std::uint64_t seed_;
};

struct McEstimate {
  double estimate = 0;
  double standard_error = 0;
};

/// Uniform sampling on the annulus a < |x| < b.
McEstimate ball_integral_mc(const std::function<double(std::span<const double>)>& f, int m,
                            const QuadratureSpec& spec);

/// Several integrands on the same samples. f writes n_terms values.
std::vector<McEstimate> ball_integral_mc_terms(
    const std::function<void(std::span<const double>, std::span<double>)>& f, int n_terms, int m,
    const QuadratureSpec& spec);

/// Worker count: hardware concurrency capped by BIHARMONIC_ATLAS_THREADS.
int worker_count();

/// Runs body(chunk) for chunk in [0, n_chunks) on worker_count() threads.
void parallel_chunks(int n_chunks, const std::function<void(int)>& body);

}  // namespace biharm
