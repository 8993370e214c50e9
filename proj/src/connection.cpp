#include "projconn/connection.hpp"

#include "projconn/error.hpp"

namespace projconn {

namespace {

void require_compatible(const ProjectiveModule& module, const TangentField& delta) {
  if (delta.ctx() != module.ctx()) throw InputError("tangent field and module live on different rings");
}

void require_endo_shape(const ProjectiveModule& module, const RingMatrix& phi) {
  if (phi.rows() != module.generators() || phi.cols() != module.generators()) {
    throw InputError("endomorphism matrix has the wrong shape");
  }
  if (phi.ctx() != module.ctx()) throw InputError("endomorphism matrix lives on a different ring");
}

RingMatrix columns_to_matrix(const RingPtr& ctx, const std::vector<RingVector>& cols) {
  const std::size_t n = cols.size();
  return RingMatrix::generate(ctx, n, n, [&](std::size_t i, std::size_t j) { return cols[j][i]; });
}

}  // namespace

RingVector nabla_lift(const ProjectiveModule& module, const TangentField& delta, const RingVector& v) {
  require_compatible(module, delta);
  if (v.size() != module.generators()) throw InputError("apply_nabla: length mismatch");
  return delta.apply(v) + delta.apply(module.M()) * v;
}

RingVector apply_nabla(const ProjectiveModule& module, const TangentField& delta, const RingVector& v) {
  return module.canonical_rep(nabla_lift(module, delta, v));
}

RingMatrix curvature(const ProjectiveModule& module, const TangentField& delta,
                     const TangentField& eta, CurvatureMethod method) {
  require_compatible(module, delta);
  require_compatible(module, eta);
  if (method == CurvatureMethod::Formula) {
    return commutator(delta.apply(module.M()), eta.apply(module.M()));
  }
  const TangentField bracket = lie_bracket(delta, eta);
  std::vector<RingVector> cols;
  for (std::size_t j = 0; j < module.generators(); ++j) {
    const RingVector e = module.generator(j);
    RingVector de = apply_nabla(module, delta, apply_nabla(module, eta, e));
    RingVector ed = apply_nabla(module, eta, apply_nabla(module, delta, e));
    RingVector b = apply_nabla(module, bracket, e);
    cols.push_back(de - ed - b);
  }
  return columns_to_matrix(module.ctx(), cols);
}

bool endo_equal(const ProjectiveModule& module, const RingMatrix& phi, const RingMatrix& psi) {
  require_endo_shape(module, phi);
  require_endo_shape(module, psi);
  return (module.M() * (phi - psi) * module.M()).is_zero();
}

Polynomial module_trace(const ProjectiveModule& module, const RingMatrix& phi) {
  require_endo_shape(module, phi);
  return matrix_trace(module.M() * phi);
}

OmegaValuedElement canonical_form(const KaehlerModule& omega, const OmegaValuedElement& e) {
  return {omega.M() * e.coeffs * omega.M().transpose()};
}

bool omega_equal(const KaehlerModule& omega, const OmegaValuedElement& a, const OmegaValuedElement& b) {
  return canonical_form(omega, OmegaValuedElement{a.coeffs - b.coeffs}).coeffs.is_zero();
}

OmegaValuedElement omega_valued_nabla(const KaehlerModule& omega, const RingVector& v) {
  if (v.size() != omega.rank()) throw InputError("omega_valued_nabla: length mismatch");
  const RingVector mv = omega.M() * v;
  const std::size_t k = omega.rank();
  RingMatrix c = RingMatrix::generate(omega.ctx(), k, k, [&](std::size_t j, std::size_t i) {
    return mv[i].derivative(j);
  });
  return canonical_form(omega, {std::move(c)});
}

OmegaValuedElement d_tensor(const KaehlerModule& omega, const Polynomial& a, const RingVector& w) {
  if (w.size() != omega.rank()) throw InputError("d_tensor: length mismatch");
  const std::size_t k = omega.rank();
  RingMatrix c = RingMatrix::generate(omega.ctx(), k, k, [&](std::size_t j, std::size_t i) {
    return a.derivative(j) * w[i];
  });
  return canonical_form(omega, {std::move(c)});
}

RingVector contract(const KaehlerModule& omega, const TangentField& delta, const OmegaValuedElement& e) {
  const std::size_t k = omega.rank();
  std::vector<Polynomial> out(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) out[i] += delta[j] * e.coeffs(j, i);
  }
  return omega.canonical_rep(RingVector(omega.ctx(), std::move(out)));
}

RingVector dual_apply(const ProjectiveModule& module, const TangentField& delta, const RingVector& y) {
  require_compatible(module, delta);
  if (y.size() != module.generators()) throw InputError("dual_apply: length mismatch");
  if (!module.is_functional(y)) throw InputError("dual_apply: row does not annihilate the relations");
  std::vector<Polynomial> w(module.generators());
  for (std::size_t j = 0; j < module.generators(); ++j) {
    const RingVector col = module.M().column(j);
    w[j] = delta.apply_raw(dot(y, col)) - dot(y, nabla_lift(module, delta, col));
  }
  return RingVector(module.ctx(), std::move(w));
}

RingMatrix ad_apply(const ProjectiveModule& module, const TangentField& delta, const RingMatrix& phi) {
  require_compatible(module, delta);
  require_endo_shape(module, phi);
  return delta.apply(phi) + commutator(delta.apply(module.M()), phi);
}

EndoTensor bullet(const ProjectiveModule& module, const EndoTensor& s, const EndoTensor& t) {
  EndoTensor out;
  for (const auto& [phi, u] : s.pairs) {
    for (const auto& [psi, v] : t.pairs) {
      if (phi.ctx() != module.ctx() || psi.ctx() != module.ctx()) {
        throw InputError("bullet: tensor lives on a different ring");
      }
      out.pairs.emplace_back(psi, u.scaled(dot(phi, v)));
    }
  }
  return out;
}

RingMatrix rho_endo(const ProjectiveModule& module, const EndoTensor& t) {
  RingMatrix sum = RingMatrix::zero(module.ctx(), module.generators(), module.generators());
  for (const auto& [y, v] : t.pairs) sum = sum + RingMatrix::outer(v, y);
  return sum;
}

EndoTensor tensor_nabla(const ProjectiveModule& module, const TangentField& delta, const EndoTensor& t) {
  EndoTensor out;
  for (const auto& [y, v] : t.pairs) {
    out.pairs.emplace_back(dual_apply(module, delta, y), v);
    out.pairs.emplace_back(y, apply_nabla(module, delta, v));
  }
  return out;
}

EndoTensor identity_witness(const ProjectiveModule& module) {
  EndoTensor w;
  for (std::size_t i = 0; i < module.generators(); ++i) {
    w.pairs.emplace_back(module.dual(i), module.generator(i));
  }
  return w;
}

bool ProjectivityReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

ProjectivityReport projectivity_report(const ProjectiveModule& module) {
  ProjectivityReport report;
  const RingMatrix& m = module.M();
  const RingMatrix defect = m * m - m;
  report.checks.push_back({"projective basis: M*M = M", defect.is_zero(),
                           defect.is_zero() ? "" : "M*M - M = " + to_json(defect).dump()});
  std::string bad_rows;
  for (std::size_t i = 0; i < module.generators(); ++i) {
    if (!module.is_functional(module.dual(i))) bad_rows += (bad_rows.empty() ? "" : ",") + std::to_string(i + 1);
  }
  report.checks.push_back({"dual rows annihilate relations", bad_rows.empty(),
                           bad_rows.empty() ? "" : "rows " + bad_rows});
  const RingMatrix id = RingMatrix::identity(module.ctx(), module.generators());
  const bool witness = endo_equal(module, rho_endo(module, identity_witness(module)), id);
  report.checks.push_back({"id_E in Im(rho) via sum x_i (x) e_i", witness, ""});
  const bool ok = report.passed();
  report.checks.push_back({"end(E) = 0", ok,
                           ok ? "Im(rho) is a two-sided ideal containing id_E" : "no certificate"});
  return report;
}

}  // namespace projconn
