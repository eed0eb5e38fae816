#include "biharm/poly.hpp"

#include <sstream>

namespace biharm {

Monomial Monomial::variable(int i, int power) {
  Monomial out;
  if (power > 0) {
    out.factors_.emplace_back(i, power);
    out.degree_ = power;
  }
  return out;
}

int Monomial::exponent(int var) const {
  for (const auto& [v, e] : factors_) {
    if (v == var) return e;
    if (v > var) break;
  }
  return 0;
}

Monomial Monomial::times_var(int var, int power) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + 1);
  bool placed = false;
  for (const auto& [v, e] : factors_) {
    if (!placed && var < v) {
      if (power < 0) throw std::logic_error("Monomial: negative exponent");
      if (power > 0) out.factors_.emplace_back(var, power);
      placed = true;
    }
    if (v == var) {
      const int ne = e + power;
      if (ne < 0) throw std::logic_error("Monomial: negative exponent");
      if (ne > 0) out.factors_.emplace_back(v, ne);
      placed = true;
    } else {
      out.factors_.emplace_back(v, e);
    }
  }
  if (!placed) {
    if (power < 0) throw std::logic_error("Monomial: negative exponent");
    if (power > 0) out.factors_.emplace_back(var, power);
  }
  out.degree_ = degree_ + power;
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() || ib != b.factors_.end()) {
    if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first)) {
      out.factors_.push_back(*ia++);
    } else if (ia == a.factors_.end() || ib->first < ia->first) {
      out.factors_.push_back(*ib++);
    } else {
      out.factors_.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

std::string to_string(const Monomial& mono) {
  if (mono.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, e] : mono.factors()) {
    if (!first) os << "*";
    os << "y" << (v + 1);
    if (e > 1) os << "^" << e;
    first = false;
  }
  return os.str();
}

std::string to_string(const RationalPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : p.terms()) {
    if (!first) os << " + ";
    os << "(" << to_string(c) << ")";
    if (!mono.is_one()) os << "*" << to_string(mono);
    first = false;
  }
  return os.str();
}

}  // namespace biharm
