#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "biharm/poly.hpp"

namespace biharm {

/// Flattened batch of numeric polynomials sharing one power table, for fast
/// repeated evaluation at points y.
class CompiledPolys {
 public:
  CompiledPolys() = default;
  CompiledPolys(int m, const std::vector<NumericPoly>& polys);

  std::size_t size() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  int max_degree() const { return max_degree_; }

  /// out[i] = polys[i](y).
  void evaluate(std::span<const double> y, std::span<double> out) const;

 private:
  int m_ = 0;
  int max_degree_ = 0;
  std::vector<std::size_t> offsets_;      // per poly, into coeffs_
  std::vector<double> coeffs_;
  std::vector<std::uint32_t> fac_offsets_;  // per term, into factors_ (size terms + 1)
  std::vector<std::uint16_t> factors_;      // var * (max_degree + 1) + exp
};

}  // namespace biharm
