#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "projconn/polynomial.hpp"

namespace projconn {

/// Total multiplicative order on monomials. `precedence` lists variable
/// indices from most to least significant; empty means 0 > 1 > 2 > ...
struct MonomialOrder {
  enum class Kind { GradedLex, Lex };

  Kind kind = Kind::GradedLex;
  std::vector<std::size_t> precedence;

  /// Returns -1, 0 or 1.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
};

/// Leading term of f under `order` (f nonzero).
const Term& leading_term(const Polynomial& f, const MonomialOrder& order);

inline constexpr unsigned kDefaultDegreeCap = 40;

/// Reduced Groebner basis, monic, sorted ascending by leading monomial.
/// Throws ResourceError if an S-pair of degree above `degree_cap` is needed.
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& generators,
                                       const MonomialOrder& order = {},
                                       std::optional<unsigned> degree_cap = std::nullopt);

/// Normal form of f modulo `basis` (assumed Groebner) under `order`.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order);

/// S-polynomial of f and g under `order`.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Names x1..xk, then t1..tk, u1..uk and w1..wk for the requested number of blocks.
std::vector<std::string> standard_names(std::size_t k, std::size_t blocks = 1);

/// Result of multivariate division: f = sum quotients[i] * groebner[i] + remainder.
struct Division {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Quotient ring Q[vars]/(relations + truncation monomials) with a Groebner
/// normal-form engine. Immutable once constructed.
class RingContext {
 public:
  RingContext(std::vector<std::string> names, std::vector<Polynomial> relations,
              MonomialOrder order = {}, std::vector<Monomial> truncation = {},
              unsigned degree_cap = kDefaultDegreeCap);

  const std::vector<std::string>& names() const { return names_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<Polynomial>& relations() const { return relations_; }
  const std::vector<Monomial>& truncation() const { return truncation_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& groebner() const { return groebner_; }

  /// Unique normal form. Throws InputError on variables outside the ring.
  Polynomial reduce(const Polynomial& f) const;
  Division divide(const Polynomial& f) const;
  bool is_zero(const Polynomial& f) const { return reduce(f).is_zero(); }
  bool equal(const Polynomial& f, const Polynomial& g) const { return is_zero(f - g); }

  void check_variables(const Polynomial& f) const;
  std::optional<std::size_t> index_of(std::string_view name) const;

  Polynomial parse(std::string_view text) const;
  std::string format(const Polynomial& f) const;

 private:
  std::vector<std::string> names_;
  std::vector<Polynomial> relations_;
  std::vector<Monomial> truncation_;
  MonomialOrder order_;
  std::vector<Polynomial> groebner_;
};

using RingPtr = std::shared_ptr<const RingContext>;

/// a(x + t) truncated to t-degree <= l, where x occupies variables
/// [0, k) and t occupies [k, 2k) of `ctx`. The result is not reduced.
Polynomial taylor_shift(const Polynomial& a, unsigned l, const RingContext& ctx, std::size_t k);

/// Parses the text grammar (terms joined by + / -, coefficients `n` or
/// `p/q`, factors joined by `*`, powers with `^`) against `names`.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names);
std::string format_polynomial(const Polynomial& f, const std::vector<std::string>& names);

}  // namespace projconn
