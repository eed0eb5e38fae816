#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biharm/rational.hpp"

namespace biharm {

enum class VerdictKind { NoProperSolution, ProperStrictlyStable, ProperKnownUnstable, ProperUndetermined };
enum class VerdictSource { Membership, Threshold, LiteratureRange };

std::string to_string(VerdictKind k);
std::string to_string(VerdictSource s);

struct StabilityVerdict {
  VerdictKind kind = VerdictKind::NoProperSolution;
  VerdictSource source = VerdictSource::Membership;
};

struct ParameterCell {
  int m = 0;
  int ell = 0;
  std::optional<Rational> sin2alpha;
  long quadratic_margin = 0;  // m^2 - 12 K
  StabilityVerdict verdict;
};

/// m^2 - 12 (l(l+m-2) + 2m - 8).
long quadratic_margin(int m, int ell);

/// Instability ranges known from the literature; not derived here.
struct KnownUnstableRange {
  int ell;
  int m_lo, m_hi;
};
const std::vector<KnownUnstableRange>& known_unstable_ranges();

/// Throws std::invalid_argument unless m >= 2 and 1 <= ell <= m.
ParameterCell classify(int m, int ell);

/// Smallest integer m > 2(sqrt(12 l^2 + 30 l + 12) + 3l + 6).
int threshold(int ell);

/// Smallest m >= max(5, l) with positive quadratic margin.
int margin_threshold(int ell);

/// All cells with l <= min(m, ell_max), 2 <= m <= m_max, m-major.
std::vector<ParameterCell> atlas(int m_max, int ell_max);

}  // namespace biharm
