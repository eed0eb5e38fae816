#pragma once

#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "biharm/deformed_map.hpp"
#include "biharm/fields.hpp"
#include "biharm/quadrature.hpp"

namespace biharm {

/// How the angular part of an integral over B^m is computed.
///  Auto: one direction times vol(S^(m-1)) for equivariant fields, product Gauss otherwise.
enum class AngularMode { Auto, ProductGauss, MonteCarlo };

/// Pointwise integrand: writes n_terms values from the jets of q and eta.
using JetKernel = std::function<void(const MapJet&, const FieldJet&, std::span<double>)>;

/// Single node e_1 with weight vol(S^(m-1)).
SphereRule single_direction_rule(int m);

/// Rule exact for the polynomial angular densities of (q, eta) integrands,
/// plus `extra` degrees. q may be null.
SphereRule angular_rule(const DeformedMap* q, const TestField& eta, int extra = 0);

/// The radial factors F = (f / r^2, f' / r, f'') of a profile.
Eigen::Vector3d radial_factors(const RadialProfile& f, double r);

/// sum over angular nodes of w_p M(y_p), where the kernel at r = 1 is a
/// quadratic form M(y) in F (polarized from six probes).
std::vector<Eigen::Matrix3d> angular_quadratic(const DeformedMap* q, const TestField& eta,
                                               const JetKernel& kernel, int n_terms,
                                               const SphereRule& rule);
/// Same for kernels linear in eta.
std::vector<Eigen::Vector3d> angular_linear(const DeformedMap* q, const TestField& eta,
                                            const JetKernel& kernel, int n_terms, const SphereRule& rule);

/// int F_a F_b r^(m-1+sigma) dr over the support of f inside (spec.a, spec.b).
Eigen::Matrix3d radial_quadratic(const RadialProfile& f, int m, double sigma, const QuadratureSpec& spec);
Eigen::Vector3d radial_linear(const RadialProfile& f, int m, double sigma, const QuadratureSpec& spec);

/// Integral of a kernel homogeneous of radial degree sigma (quadratic in eta).
std::vector<double> integrate_quadratic(const DeformedMap* q, const TestField& eta, const JetKernel& kernel,
                                        int n_terms, double sigma, const QuadratureSpec& spec,
                                        const SphereRule& rule);
std::vector<double> integrate_linear(const DeformedMap* q, const TestField& eta, const JetKernel& kernel,
                                     int n_terms, double sigma, const QuadratureSpec& spec,
                                     const SphereRule& rule);

/// Monte Carlo over the annulus (spec.a, spec.b), evaluating the kernel at true points.
std::vector<McEstimate> integrate_mc(const DeformedMap* q, const TestField& eta, const JetKernel& kernel,
                                     int n_terms, const QuadratureSpec& spec);

/// Jet of q at r from a jet at r = 1.
MapJet rescale(const MapJet& unit, double r);

}  // namespace biharm
