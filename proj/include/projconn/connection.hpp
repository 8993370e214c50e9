#pragma once

#include <string>
#include <utility>
#include <vector>

#include "projconn/ellipsoid.hpp"

namespace projconn {

// Connection induced by a projective basis: on a lift v,
//   nabla(delta)(v) = D_delta(v) + delta(M) v,
// with D_delta applying delta entrywise.

/// nabla(delta)(v) on lifts, without canonicalization.
RingVector nabla_lift(const ProjectiveModule& module, const TangentField& delta, const RingVector& v);
/// Canonical representative of nabla(delta)(v).
RingVector apply_nabla(const ProjectiveModule& module, const TangentField& delta, const RingVector& v);

enum class CurvatureMethod { Formula, Definitional };

/// Formula: [delta(M), eta(M)].
/// Definitional: column j is nabla(d)nabla(e)(e_j) - nabla(e)nabla(d)(e_j)
/// - nabla([d,e])(e_j), evaluated on canonical representatives.
RingMatrix curvature(const ProjectiveModule& module, const TangentField& delta,
                     const TangentField& eta, CurvatureMethod method);

/// Equality in End_A(E): M (phi - psi) M = 0.
bool endo_equal(const ProjectiveModule& module, const RingMatrix& phi, const RingMatrix& psi);

/// tr(M phi), the trace of phi as an endomorphism of E.
Polynomial module_trace(const ProjectiveModule& module, const RingMatrix& phi);

/// Element sum C_ji dx_j (x) dx_i of Omega (x)_A Omega; `coeffs(j, i)` is the
/// coefficient of dx_j (x) dx_i.
struct OmegaValuedElement {
  RingMatrix coeffs;
};

/// Projector applied on both slots: M C M^T.
OmegaValuedElement canonical_form(const KaehlerModule& omega, const OmegaValuedElement& e);
bool omega_equal(const KaehlerModule& omega, const OmegaValuedElement& a, const OmegaValuedElement& b);

/// nabla(w) = sum_i d(x_i(w)) (x) w_i with the universal derivation d.
OmegaValuedElement omega_valued_nabla(const KaehlerModule& omega, const RingVector& v);
/// d(a) (x) w.
OmegaValuedElement d_tensor(const KaehlerModule& omega, const Polynomial& a, const RingVector& w);
/// Pairs the first slot with a tangent field: sum_j f_j C_ji, canonicalized.
RingVector contract(const KaehlerModule& omega, const TangentField& delta, const OmegaValuedElement& e);

/// Dual connection on E^*: w_j = delta(y(e_j)) - y(nabla(delta)(e_j)).
/// Throws InputError when y does not annihilate the relations.
RingVector dual_apply(const ProjectiveModule& module, const TangentField& delta, const RingVector& y);

/// Matrix of nabla(delta) o phi - phi o nabla(delta) on lifts: delta(phi) + [delta(M), phi].
RingMatrix ad_apply(const ProjectiveModule& module, const TangentField& delta, const RingMatrix& phi);

/// Element sum (y_i (x) v_i) of E^* (x)_A E; y_i are functionals, v_i lifts.
struct EndoTensor {
  std::vector<std::pair<RingVector, RingVector>> pairs;
};

/// (phi (x) u) . (psi (x) v) = psi (x) phi(v) u, extended bilinearly.
EndoTensor bullet(const ProjectiveModule& module, const EndoTensor& s, const EndoTensor& t);
/// rho(sum y_i (x) v_i) = sum v_i y_i (column times row).
RingMatrix rho_endo(const ProjectiveModule& module, const EndoTensor& t);
/// Induced connection on E^* (x) E: nabla^*(y) (x) v + y (x) nabla(v).
EndoTensor tensor_nabla(const ProjectiveModule& module, const TangentField& delta, const EndoTensor& t);
/// sum_i x_i (x) e_i.
EndoTensor identity_witness(const ProjectiveModule& module);

struct ProjectivityReport {
  struct Check {
    std::string name;
    bool passed;
    std::string detail;
  };
  std::vector<Check> checks;
  bool passed() const;
};

/// Checks M^2 = M, that every dual row annihilates the relations, and that
/// the witness tensor maps to an endomorphism equal to the identity, which
/// certifies Im(rho) = End_A(E) and hence end(E) = 0.
ProjectivityReport projectivity_report(const ProjectiveModule& module);

}  // namespace projconn
