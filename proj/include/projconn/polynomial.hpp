#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <vector>

#include "projconn/monomial.hpp"

namespace projconn {

/// Exact rational coefficient; GMP keeps it canonical (reduced, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;

struct Term {
  Monomial monomial;
  Rational coeff;

  friend bool operator==(const Term& a, const Term& b) {
    return a.monomial == b.monomial && a.coeff == b.coeff;
  }
};

/// Sparse polynomial with exact rational coefficients. Terms are kept in
/// descending graded-lex order (x1 > x2 > ...) with no zero coefficients,
/// so structural equality is mathematical equality.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT: constants convert implicitly
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT
  Polynomial(int c) : Polynomial(Rational(c)) {}   // NOLINT

  static Polynomial variable(std::size_t index);
  static Polynomial monomial(const Monomial& m, const Rational& c = 1);
  /// Takes arbitrary terms, combines duplicates and drops zeros.
  static Polynomial from_terms(std::vector<Term> terms);

  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant coefficient (zero if absent).
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  unsigned total_degree() const;
  /// Highest variable index in use, -1 for constants.
  int last_variable() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  /// Multiplies by c * m.
  Polynomial times_term(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned e) const;

  /// Partial derivative with respect to variable `index`.
  Polynomial derivative(std::size_t index) const;

  /// Simultaneous substitution var(i) -> images[i] for i < images.size();
  /// higher variables are left alone.
  Polynomial substitute(std::span<const Polynomial> images) const;

  /// Drops every term whose degree in variables [first, last) exceeds max_degree.
  Polynomial truncate(std::size_t first, std::size_t last, unsigned max_degree) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::vector<Term> terms_;
};

}  // namespace projconn
