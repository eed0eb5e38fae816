#include "biharm/identities.hpp"

#include <algorithm>

#include "biharm/calculus.hpp"
#include "biharm/tensor_map.hpp"

namespace biharm {

bool IdentityReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
}

IdentityReport verify_identities(int m, int ell, int k_max) {
  IdentityReport rep;
  rep.m = m;
  rep.ell = ell;
  const TensorMap map = build_u(m, ell);
  const RationalPoly sphere = pow(RationalPoly::norm_squared(m), ell);
  const RationalPoly n2 = norm_squared_poly(map);
  rep.checks.push_back({"unit_norm", n2 == sphere, "sum_I u_I^2 = (|y|^2)^" + std::to_string(ell)});

  bool homogeneous = true;
  for (const auto& c : map.components()) homogeneous = homogeneous && c.poly.homogeneous_part(ell) == c.poly;
  rep.checks.push_back({"homogeneity", homogeneous, "every component homogeneous of degree " + std::to_string(ell)});

  const TensorField u = TensorField::from_map(map);
  const RadialPoly<Rational> g = grad_dot(u, u);
  const long L = static_cast<long>(ell) * (ell + m - 2);
  rep.checks.push_back({"gradient_energy",
                        g.weight == 2 && poly_equal_mod_sphere(g.poly, RationalPoly::constant(m, Rational(L))),
                        "|du|^2 = " + std::to_string(L) + "/r^2"});
  rep.checks.push_back({"harmonicity", is_zero_mod_sphere(add_scaled(laplacian(u), g, u)),
                        "Lap u + |du|^2 u = 0"});
  rep.checks.push_back({"orthogonality", is_zero_mod_sphere(euler_radial_contraction(u)), "sum_j y_j d_j u = 0"});

  TensorField lap = u;
  for (int k = 1; k <= k_max; ++k) {
    lap = laplacian(lap);
    const Integer c = iterated_laplacian_coefficient(m, ell, k);
    rep.checks.push_back({"iterated_laplacian_k" + std::to_string(k),
                          equal_mod_sphere(lap, scaled(u, Rational(c), 2 * k)),
                          "Lap^" + std::to_string(k) + " u = " + c.get_str() + " u / r^" + std::to_string(2 * k)});
  }
  return rep;
}

}  // namespace biharm
