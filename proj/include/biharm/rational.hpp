#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace biharm {

using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q" with q omitted when it is 1.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

/// Exact value q * sqrt(d) with d square-free and positive.
///
/// Carries the C_{l,m} normalisation constants of the radial projection so
/// that products of them never leave exact arithmetic. Squares are always
/// rational.
class SurdScale {
 public:
  SurdScale() : rational_(1), radicand_(1) {}
  SurdScale(Rational q, std::int64_t d);

  /// sqrt(q) for a non-negative rational q.
  static SurdScale sqrt_of(const Rational& q);

  const Rational& rational() const { return rational_; }
  std::int64_t radicand() const { return radicand_; }
  bool is_rational() const { return radicand_ == 1 || rational_ == 0; }

  Rational squared() const { return rational_ * rational_ * radicand_; }
  double value() const;

  friend SurdScale operator*(const SurdScale& a, const SurdScale& b);
  friend bool operator==(const SurdScale& a, const SurdScale& b) {
    return a.rational_ == b.rational_ && a.radicand_ == b.radicand_;
  }

 private:
  void normalize();

  Rational rational_;
  std::int64_t radicand_;
};

std::string to_string(const SurdScale& s);

}  // namespace biharm
