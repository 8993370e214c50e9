#include "projconn/monomial.hpp"

#include <algorithm>
#include <string>

#include "projconn/error.hpp"

namespace projconn {

namespace {
constexpr unsigned kMaxExponent = 0xFFFF;

void check_exponent(unsigned e) {
  if (e > kMaxExponent) {
    throw ResourceError("exponent " + std::to_string(e) + " exceeds 65535");
  }
}
}  // namespace

Monomial::Monomial(std::initializer_list<unsigned> exponents) {
  if (exponents.size() > kMaxVariables) {
    throw InputError("too many variables in monomial");
  }
  std::size_t i = 0;
  for (unsigned e : exponents) set(i++, e);
}

Monomial Monomial::variable(std::size_t index, unsigned power) {
  if (index >= kMaxVariables) throw InputError("variable index out of range");
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  check_exponent(e);
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = static_cast<Exponent>(e);
}

int Monomial::last_variable() const {
  for (int i = static_cast<int>(kMaxVariables) - 1; i >= 0; --i) {
    if (exps_[i] != 0) return i;
  }
  return -1;
}

unsigned Monomial::degree_in(std::size_t first, std::size_t last) const {
  unsigned d = 0;
  for (std::size_t i = first; i < last && i < kMaxVariables; ++i) d += exps_[i];
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    unsigned e = unsigned{a.exps_[i]} + b.exps_[i];
    check_exponent(e);
    m.exps_[i] = static_cast<Monomial::Exponent>(e);
  }
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    m.exps_[i] = static_cast<Monomial::Exponent>(a.exps_[i] - b.exps_[i]);
  }
  m.degree_ = a.degree_ - b.degree_;
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  unsigned d = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    d += m.exps_[i];
  }
  m.degree_ = d;
  return m;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (Exponent e : exps_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace projconn
