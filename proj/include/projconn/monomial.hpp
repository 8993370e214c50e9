#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>

namespace projconn {

/// Upper bound on variables in any ring: x, t and u blocks of at most
/// five variables each, plus headroom.
inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector with inline storage. Unused trailing slots are zero, so a
/// monomial in x1..xk is also a monomial of every ring that lists x1..xk first.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  Monomial(std::initializer_list<unsigned> exponents);

  static Monomial variable(std::size_t index, unsigned power = 1);

  unsigned operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, unsigned e);
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  /// Highest variable index with a nonzero exponent, or -1 for the unit.
  int last_variable() const;
  /// Sum of exponents over variables [first, last).
  unsigned degree_in(std::size_t first, std::size_t last) const;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }

  /// Graded-lex comparison with precedence x1 > x2 > ... (the canonical
  /// storage order for polynomials). Returns -1, 0 or 1.
  friend int grlex_compare(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_ ? -1 : 1;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (a.exps_[i] != b.exps_[i]) return a.exps_[i] < b.exps_[i] ? -1 : 1;
    }
    return 0;
  }

  std::size_t hash() const;

 private:
  std::array<Exponent, kMaxVariables> exps_{};
  unsigned degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Strict "a comes first" in descending canonical order.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlex_compare(a, b) > 0;
  }
};

}  // namespace projconn
