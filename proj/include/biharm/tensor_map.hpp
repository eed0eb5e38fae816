#pragma once

#include <cstddef>
#include <vector>

#include "biharm/poly.hpp"
#include "biharm/rational.hpp"

namespace biharm {

/// Where the recursion places the multiplying y factor.
/// First: y_{i_1} (as displayed in the source). Last: y_{i_l}.
enum class RecursionIndex { First, Last };

struct TensorComponent {
  SurdScale scale;
  RationalPoly poly;
};

/// u^(l): m^l components, each scale * poly(y). Components are stored densely,
/// flattened with i_1 as the most significant digit.
class TensorMap {
 public:
  TensorMap(int m, int ell) : m_(m), ell_(ell) {}

  int dim() const { return m_; }
  int order() const { return ell_; }
  std::size_t size() const { return components_.size(); }

  const TensorComponent& operator[](std::size_t flat) const { return components_[flat]; }
  const std::vector<TensorComponent>& components() const { return components_; }
  std::vector<TensorComponent>& components() { return components_; }

  /// 0-based multi-index of a flat position.
  std::vector<int> multi_index(std::size_t flat) const;
  std::size_t flat_index(const std::vector<int>& idx) const;

 private:
  int m_;
  int ell_;
  std::vector<TensorComponent> components_;
};

/// C_{l,m}^2 = (l+m-3)/(2l+m-4).
Rational recursion_constant_squared(int ell, int m);

/// Build u^(l) on B^m. Throws std::invalid_argument unless 1 <= ell <= m and m >= 2.
TensorMap build_u(int m, int ell, RecursionIndex placement = RecursionIndex::Last);

/// sum_I scale_I^2 * P_I^2 as an exact polynomial.
RationalPoly norm_squared_poly(const TensorMap& t);

}  // namespace biharm
