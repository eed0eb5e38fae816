#include "biharm/compiled.hpp"

#include <algorithm>
#include <stdexcept>

namespace biharm {

CompiledPolys::CompiledPolys(int m, const std::vector<NumericPoly>& polys) : m_(m) {
  for (const auto& p : polys) max_degree_ = std::max(max_degree_, p.degree());
  if (static_cast<long>(m) * (max_degree_ + 1) > 65535)
    throw std::length_error("CompiledPolys: power table too large");
  offsets_.push_back(0);
  fac_offsets_.push_back(0);
  for (const auto& p : polys) {
    for (const auto& [mono, c] : p.terms()) {
      coeffs_.push_back(c);
      for (const auto& [v, e] : mono.factors())
        factors_.push_back(static_cast<std::uint16_t>(v * (max_degree_ + 1) + e));
      fac_offsets_.push_back(static_cast<std::uint32_t>(factors_.size()));
    }
    offsets_.push_back(coeffs_.size());
  }
}

void CompiledPolys::evaluate(std::span<const double> y, std::span<double> out) const {
  const int stride = max_degree_ + 1;
  thread_local std::vector<double> table;
  table.assign(static_cast<std::size_t>(m_) * stride, 1.0);
  for (int v = 0; v < m_; ++v)
    for (int e = 1; e <= max_degree_; ++e) table[v * stride + e] = table[v * stride + e - 1] * y[v];
  for (std::size_t i = 0; i + 1 < offsets_.size(); ++i) {
    double acc = 0;
    for (std::size_t t = offsets_[i]; t < offsets_[i + 1]; ++t) {
      double term = coeffs_[t];
      for (std::uint32_t f = fac_offsets_[t]; f < fac_offsets_[t + 1]; ++f) term *= table[factors_[f]];
      acc += term;
    }
    out[i] = acc;
  }
}

}  // namespace biharm
