#include "biharm/tensor_map.hpp"

#include <stdexcept>
#include <string>

namespace biharm {

std::vector<int> TensorMap::multi_index(std::size_t flat) const {
  std::vector<int> idx(ell_);
  for (int k = ell_ - 1; k >= 0; --k) {
    idx[k] = static_cast<int>(flat % m_);
    flat /= m_;
  }
  return idx;
}

std::size_t TensorMap::flat_index(const std::vector<int>& idx) const {
  std::size_t flat = 0;
  for (int i : idx) flat = flat * m_ + static_cast<std::size_t>(i);
  return flat;
}

Rational recursion_constant_squared(int ell, int m) {
  Rational c(ell + m - 3, 2 * ell + m - 4);
  c.canonicalize();
  return c;
}

namespace {

// r * d/dx_j of a weight-0 polynomial P(y): dP/dy_j - y_j <y, grad P>.
RationalPoly r_times_dx(const RationalPoly& p, int j) {
  return p.diff(j) - p.euler_shifted(0).times_variable(j);
}

}  // namespace

TensorMap build_u(int m, int ell, RecursionIndex placement) {
  if (m < 2) throw std::invalid_argument("build_u: m must be at least 2");
  if (ell < 1) throw std::invalid_argument("build_u: ell must be at least 1");
  if (ell > m)
    throw std::invalid_argument("build_u: ell = " + std::to_string(ell) + " exceeds m = " +
                                std::to_string(m));

  TensorMap prev(m, 1);
  for (int i = 0; i < m; ++i) prev.components().push_back({SurdScale(), RationalPoly::variable(m, i)});

  for (int l = 2; l <= ell; ++l) {
    TensorMap next(m, l);
    next.components().reserve(prev.size() * m);
    const SurdScale c = SurdScale::sqrt_of(recursion_constant_squared(l, m));
    const Rational inv(1, l + m - 3);
    for (std::size_t flat = 0; flat < prev.size(); ++flat) {
      const TensorComponent& base = prev[flat];
      const int first = prev.multi_index(flat).front();
      for (int i = 0; i < m; ++i) {
        const int mult = placement == RecursionIndex::Last ? i : first;
        RationalPoly p = base.poly.times_variable(mult) - r_times_dx(base.poly, i) * inv;
        next.components().push_back({base.scale * c, homogenize(p, l)});
      }
    }
    prev = std::move(next);
  }
  return prev;
}

RationalPoly norm_squared_poly(const TensorMap& t) {
  RationalPoly out(t.dim());
  for (const auto& comp : t.components()) out += comp.poly * comp.poly * comp.scale.squared();
  return out;
}

}  // namespace biharm
