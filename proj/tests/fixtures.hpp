#pragma once

#include <random>
#include <vector>

#include "biharm/fields.hpp"

namespace biharm::testing {

inline Eigen::VectorXd gaussian_vector(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Eigen::VectorXd w(n);
  for (int i = 0; i < n; ++i) w[i] = g(rng);
  return w;
}

inline std::vector<TestField> hessian_fields(const DeformedMap& q) { return standard_hessian_fields(q); }
inline std::vector<TestField> residual_fields(const DeformedMap& q) { return standard_residual_fields(q); }
inline std::vector<RadialProfile> hardy_profiles() { return standard_hardy_profiles(); }

}  // namespace biharm::testing
