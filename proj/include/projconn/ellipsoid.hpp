#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "projconn/matrix.hpp"

namespace projconn {

/// Coordinate ring Q[x1..xk]/(H) of the ellipsoid H = x1^p1 + ... + xk^pk - 1.
class EllipsoidRing {
 public:
  /// Throws InputError unless k >= 2 and every exponent is >= 1.
  explicit EllipsoidRing(std::vector<unsigned> exponents);

  std::size_t k() const { return exponents_.size(); }
  const std::vector<unsigned>& exponents() const { return exponents_; }
  const Polynomial& H() const { return h_; }
  const RingPtr& ctx() const { return ctx_; }
  /// "2,2,2"
  std::string label() const;

 private:
  std::vector<unsigned> exponents_;
  Polynomial h_;
  RingPtr ctx_;
};

/// Derivation sum_i f_i d/dx_i of the ambient ring. Coefficients are
/// reduced; `apply` returns normal forms.
class TangentField {
 public:
  TangentField(RingPtr ctx, std::vector<Polynomial> coeffs, std::string name = {});

  const RingPtr& ctx() const { return ctx_; }
  std::size_t size() const { return coeffs_.size(); }
  const Polynomial& operator[](std::size_t i) const { return coeffs_[i]; }
  const std::vector<Polynomial>& coeffs() const { return coeffs_; }
  const std::string& name() const { return name_; }

  /// delta(f) without reduction.
  Polynomial apply_raw(const Polynomial& f) const;
  Polynomial apply(const Polynomial& f) const { return ctx_->reduce(apply_raw(f)); }
  RingVector apply(const RingVector& v) const;
  RingMatrix apply(const RingMatrix& m) const;
  bool is_zero() const;
  /// "x2*d1 - x1*d2"
  std::string to_string() const;

 private:
  RingPtr ctx_;
  std::vector<Polynomial> coeffs_;
  std::string name_;
};

/// delta_ij = pj xj^(pj-1) d_i - pi xi^(pi-1) d_j for i < j, in the order
/// (1,2), (1,3), ..., (k-1,k). When all exponents agree the common factor p
/// is divided out, so the sphere gives x2 d1 - x1 d2 and so on.
std::vector<TangentField> tangent_generators(const EllipsoidRing& ring);

/// Coefficients (delta(g_i) - eta(f_i))_i.
TangentField lie_bracket(const TangentField& delta, const TangentField& eta);

/// Finitely generated projective module presented as the image of an
/// idempotent n x n matrix M acting on lifts in A^n. `relations` span the
/// kernel of the presentation (empty for a free module). Two lifts name the
/// same element iff M v = M w.
class ProjectiveModule {
 public:
  ProjectiveModule(std::string name, RingMatrix fundamental, std::vector<RingVector> relations);

  static ProjectiveModule free(RingPtr ctx, std::size_t rank);

  const std::string& name() const { return name_; }
  const RingPtr& ctx() const { return m_.ctx(); }
  std::size_t generators() const { return m_.rows(); }
  const RingMatrix& M() const { return m_; }
  const std::vector<RingVector>& relations() const { return relations_; }

  /// Dual basis functional x_i = row i of M.
  RingVector dual(std::size_t i) const { return m_.row(i); }
  /// Generator lift e_j.
  RingVector generator(std::size_t j) const;

  /// M v; zero iff v lies in the span of the relations.
  RingVector canonical_rep(const RingVector& v) const;
  bool same_class(const RingVector& v, const RingVector& w) const;
  /// y . r = 0 for every relation r.
  bool is_functional(const RingVector& y) const;

 private:
  std::string name_;
  RingMatrix m_;
  std::vector<RingVector> relations_;
};

/// Omega = A{dx_1..dx_k}/(dH) with the splitting s(dx_i) = e_i - (1/p_i) x_i G.
class KaehlerModule {
 public:
  explicit KaehlerModule(EllipsoidRing ring);

  const EllipsoidRing& ring() const { return ring_; }
  const RingPtr& ctx() const { return ring_.ctx(); }
  std::size_t rank() const { return ring_.k(); }
  /// G = (p_i x_i^(p_i - 1))_i
  const RingVector& G() const { return g_; }
  const RingMatrix& M() const { return module_.M(); }
  const ProjectiveModule& module() const { return module_; }
  RingVector canonical_rep(const RingVector& v) const { return module_.canonical_rep(v); }

 private:
  EllipsoidRing ring_;
  RingVector g_;
  ProjectiveModule module_;
};

inline KaehlerModule build_kaehler(const EllipsoidRing& ring) { return KaehlerModule(ring); }

}  // namespace projconn
