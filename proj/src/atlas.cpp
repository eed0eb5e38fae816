#include "biharm/atlas.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "biharm/deformed_map.hpp"

namespace biharm {

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::NoProperSolution: return "NoProperSolution";
    case VerdictKind::ProperStrictlyStable: return "ProperStrictlyStable";
    case VerdictKind::ProperKnownUnstable: return "ProperKnownUnstable";
    case VerdictKind::ProperUndetermined: return "ProperUndetermined";
  }
  return "?";
}

std::string to_string(VerdictSource s) {
  switch (s) {
    case VerdictSource::Membership: return "membership";
    case VerdictSource::Threshold: return "threshold";
    case VerdictSource::LiteratureRange: return "literature-range";
  }
  return "?";
}

long quadratic_margin(int m, int ell) { return static_cast<long>(m) * m - 12 * angle_numerator(m, ell); }

const std::vector<KnownUnstableRange>& known_unstable_ranges() {
  static const std::vector<KnownUnstableRange> ranges = {{1, 5, 6}, {2, 5, 12}, {3, 5, 18}};
  return ranges;
}

ParameterCell classify(int m, int ell) {
  if (m < 2 || ell < 1) throw std::invalid_argument("classify: need m >= 2 and ell >= 1");
  if (ell > m) throw std::invalid_argument("classify: ell must not exceed m");
  ParameterCell c;
  c.m = m;
  c.ell = ell;
  c.sin2alpha = solve_alpha(m, ell);
  c.quadratic_margin = quadratic_margin(m, ell);
  if (!c.sin2alpha) {
    c.verdict = {VerdictKind::NoProperSolution, VerdictSource::Membership};
  } else if (c.quadratic_margin > 0) {
    c.verdict = {VerdictKind::ProperStrictlyStable, VerdictSource::Threshold};
  } else {
    const auto& r = known_unstable_ranges();
    const bool hit = std::any_of(r.begin(), r.end(), [&](const KnownUnstableRange& k) {
      return k.ell == ell && m >= k.m_lo && m <= k.m_hi;
    });
    c.verdict = hit ? StabilityVerdict{VerdictKind::ProperKnownUnstable, VerdictSource::LiteratureRange}
                    : StabilityVerdict{VerdictKind::ProperUndetermined, VerdictSource::Threshold};
  }
  return c;
}

namespace {

long isqrt(long n) {
  long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

int threshold(int ell) {
  if (ell < 1) throw std::invalid_argument("threshold: ell must be positive");
  // 2 sqrt(D) = sqrt(4D); floor(base + sqrt(4D)) + 1 covers the square case too
  const long four_d = 4L * (12L * ell * ell + 30L * ell + 12);
  const long s = isqrt(four_d);
  const long base = 6L * ell + 12;
  return static_cast<int>(base + s + 1);
}

int margin_threshold(int ell) {
  if (ell < 1) throw std::invalid_argument("margin_threshold: ell must be positive");
  for (int m = std::max(5, ell);; ++m)
    if (quadratic_margin(m, ell) > 0) return m;
}

std::vector<ParameterCell> atlas(int m_max, int ell_max) {
  if (ell_max < 1 || m_max < 2) throw std::invalid_argument("atlas: need m_max >= 2 and ell_max >= 1");
  if (ell_max > m_max) throw std::invalid_argument("atlas: ell_max must not exceed m_max");
  std::vector<ParameterCell> out;
  for (int m = 2; m <= m_max; ++m)
    for (int ell = 1; ell <= std::min(m, ell_max); ++ell) out.push_back(classify(m, ell));
  return out;
}

}  // namespace biharm
