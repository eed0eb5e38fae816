#pragma once

#include <span>

#include "biharm/deformed_map.hpp"
#include "biharm/fields.hpp"

namespace biharm {

/// Pointwise integrands. Each writes a fixed number of signed terms; the
/// integral of their sum is the quantity named.

/// Hessian of E_2, sphere form (5 terms):
/// |Lap eta|^2, 2|du|^4|eta|^2, -<Lap^2 u, u>|eta|^2, -2|du|^2|d eta|^2, -4<du, d eta>^2.
void sphere_hessian_terms(const MapJet& u, const FieldJet& eta, std::span<double> out);
inline constexpr int kSphereTerms = 5;

/// Hessian of E_2 in the constant-curvature Jiang form (4 terms).
void jiang_hessian_terms(const MapJet& u, const FieldJet& v, std::span<double> out);
inline constexpr int kJiangTerms = 4;

/// Hessian of the p-energy (2 terms):
/// |du|^(p-2)(|d eta|^2 - |du|^2|eta|^2), (p-2)|du|^(p-4)<du, d eta>^2.
void p_energy_terms(double p, const MapJet& u, const FieldJet& eta, std::span<double> out);
inline constexpr int kPEnergyTerms = 2;

/// |Lap eta|^2 and |d eta|^2 / r^2.
void hardy_terms(const MapJet& u, const FieldJet& eta, std::span<double> out);
inline constexpr int kHardyTerms = 2;

/// Weak biharmonic pairing with phi (3 terms):
/// <Lap q, Lap phi>, -2|dq|^2 <dq, d phi>, -(<Lap^2 q, q> - 2|dq|^4)<q, phi>.
void weak_residual_terms(const MapJet& q, const FieldJet& phi, std::span<double> out);
inline constexpr int kResidualTerms = 3;

/// Strong bitension paired with V (4 terms):
/// <Lap^2 q, V>, 2<<grad G, grad q>, V>, 2G<Lap q, V>, -(<Lap^2 q, q> - 2G^2)<q, V>.
void bitension_terms(const MapJet& q, const FieldJet& v, std::span<double> out);
inline constexpr int kBitensionTerms = 4;

/// sum_j <d_j q, d_j eta>
double grad_pairing(const MapJet& u, const FieldJet& eta);

/// Energy density 1/2(|Lap w|^2 - |dw|^4) of w / |w| from the jets of w.
double normalized_bienergy_density(const Eigen::VectorXd& w, const Eigen::MatrixXd& dw,
                                   const Eigen::VectorXd& lapw);

/// Same density from the Gram matrix of (w, d_1 w, ..., d_m w, Lap w).
double normalized_bienergy_density_gram(const Eigen::Ref<const Eigen::MatrixXd>& gram);

}  // namespace biharm
