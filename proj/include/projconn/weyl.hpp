#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "projconn/ellipsoid.hpp"

namespace projconn {

/// Multi-index alpha of d^alpha = d1^a1 ... dk^ak, stored as a Monomial.
using MultiIndex = Monomial;

/// Normal-ordered differential operator sum_alpha c_alpha d^alpha acting on
/// the ring through ambient representatives. Coefficients are reduced and
/// nonzero. Only operators built from tangent fields and multiplications are
/// guaranteed to preserve the defining ideal.
class DiffOperator {
 public:
  using Terms = std::map<MultiIndex, Polynomial, GrlexGreater>;

  DiffOperator(RingPtr ctx, std::size_t nvars);
  DiffOperator(RingPtr ctx, std::size_t nvars, Terms terms);

  static DiffOperator zero(RingPtr ctx, std::size_t nvars) { return {std::move(ctx), nvars}; }
  static DiffOperator identity(RingPtr ctx, std::size_t nvars) { return multiplication(std::move(ctx), nvars, 1); }
  static DiffOperator multiplication(RingPtr ctx, std::size_t nvars, const Polynomial& a);
  static DiffOperator from_field(const TangentField& field);

  const RingPtr& ctx() const { return ctx_; }
  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Polynomial coefficient(const MultiIndex& alpha) const;

  /// max |alpha|, -1 for the zero operator.
  int order() const;
  /// sum c_alpha d^alpha f, reduced.
  Polynomial apply(const Polynomial& f) const;

  DiffOperator operator+(const DiffOperator& other) const;
  DiffOperator operator-(const DiffOperator& other) const;
  /// Left multiplication a . T.
  DiffOperator scaled(const Polynomial& a) const;

  /// "x2*x3*d1^2 - x2*d3"
  std::string to_string() const;

  friend bool operator==(const DiffOperator& a, const DiffOperator& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  RingPtr ctx_;
  std::size_t nvars_;
  Terms terms_;
};

/// Normal-ordered S o T via d_i o c = c d_i + dc/dx_i.
DiffOperator compose(const DiffOperator& s, const DiffOperator& t);

/// [...[T, a_1], ..., a_m] with [T, a] = T o a - a o T.
DiffOperator iterated_commutator(const DiffOperator& t, const std::vector<Polynomial>& multipliers);

/// sum over H in {1..m} of (-1)^|H| (prod_{i in H} a_i) T((prod_{i not in H} a_i) f).
Polynomial subset_expansion(const DiffOperator& t, const std::vector<Polynomial>& multipliers,
                            const Polynomial& f);

/// n x n grid of operators acting componentwise on lifts.
class OperatorMatrix {
 public:
  OperatorMatrix(std::size_t n, std::vector<DiffOperator> entries);

  std::size_t size() const { return n_; }
  const DiffOperator& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  const std::vector<DiffOperator>& entries() const { return entries_; }

  OperatorMatrix operator-(const OperatorMatrix& other) const;

 private:
  std::size_t n_;
  std::vector<DiffOperator> entries_;
};

/// Row i acts as T composed with multiplication by row i of M.
OperatorMatrix rho_lift(const DiffOperator& t, const ProjectiveModule& module);
/// Action on a lift without canonicalization.
RingVector opmatrix_apply_lift(const OperatorMatrix& tm, const RingVector& v);
/// Action on a lift, canonicalized through M.
RingVector opmatrix_apply(const OperatorMatrix& tm, const RingVector& v, const ProjectiveModule& module);
OperatorMatrix opmatrix_compose(const OperatorMatrix& a, const OperatorMatrix& b);

/// rho(S o T) - rho(S) o rho(T).
OperatorMatrix multiplicativity_defect(const DiffOperator& s, const DiffOperator& t,
                                       const ProjectiveModule& module);

/// True when tm maps every relation lift into the relation span.
bool descends(const OperatorMatrix& tm, const ProjectiveModule& module);
/// M o (a - b) o M has only zero entries as operators.
bool module_equal(const OperatorMatrix& a, const OperatorMatrix& b, const ProjectiveModule& module);

}  // namespace projconn
