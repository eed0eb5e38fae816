#include "biharm/rational.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace biharm {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

SurdScale::SurdScale(Rational q, std::int64_t d) : rational_(std::move(q)), radicand_(d) {
  if (d <= 0) throw std::invalid_argument("SurdScale: radicand must be positive");
  rational_.canonicalize();
  normalize();
}

SurdScale SurdScale::sqrt_of(const Rational& q) {
  if (q < 0) throw std::invalid_argument("SurdScale::sqrt_of: negative argument");
  Rational c = q;
  c.canonicalize();
  // sqrt(n/d) = sqrt(n*d)/d
  const Integer nd = c.get_num() * c.get_den();
  if (!nd.fits_slong_p()) throw std::overflow_error("SurdScale::sqrt_of: radicand too large");
  return SurdScale(Rational(1, c.get_den()), nd.get_si() == 0 ? 1 : nd.get_si());
}

void SurdScale::normalize() {
  if (rational_ == 0) {
    radicand_ = 1;
    return;
  }
  std::int64_t d = radicand_;
  std::int64_t out = 1;
  for (std::int64_t p = 2; p * p <= d; ++p) {
    while (d % (p * p) == 0) {
      d /= p * p;
      out *= p;
    }
  }
  radicand_ = d;
  rational_ *= out;
  rational_.canonicalize();
}

double SurdScale::value() const {
  return rational_.get_d() * std::sqrt(static_cast<double>(radicand_));
}

SurdScale operator*(const SurdScale& a, const SurdScale& b) {
  // sqrt(d1)*sqrt(d2) = g*sqrt(d1/g * d2/g) with g = gcd(d1,d2), both square-free.
  const std::int64_t g = std::gcd(a.radicand_, b.radicand_);
  Rational q = a.rational_ * b.rational_ * g;
  return SurdScale(q, (a.radicand_ / g) * (b.radicand_ / g));
}

std::string to_string(const SurdScale& s) {
  if (s.radicand() == 1) return to_string(s.rational());
  return to_string(s.rational()) + "*sqrt(" + std::to_string(s.radicand()) + ")";
}

}  // namespace biharm
