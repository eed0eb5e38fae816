#pragma once

#include <string>
#include <vector>

namespace biharm {

struct IdentityCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct IdentityReport {
  int m = 0;
  int ell = 0;
  std::vector<IdentityCheck> checks;
  bool all_passed() const;
};

/// Exact checks on u^(l): unit norm, homogeneity, harmonicity, gradient
/// energy, the Euler contraction and Lap^k u = c_k u / r^(2k) for k <= k_max.
IdentityReport verify_identities(int m, int ell, int k_max = 3);

}  // namespace biharm
