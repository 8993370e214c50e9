#include "projconn/suites.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "projconn/connection.hpp"
#include "projconn/error.hpp"
#include "projconn/jets.hpp"
#include "projconn/mcm.hpp"
#include "projconn/sampling.hpp"
#include "projconn/weyl.hpp"

namespace projconn {

namespace {

class Recorder {
 public:
  explicit Recorder(VerificationReport& report) : report_(report) {}

  void check(std::string name, bool ok, std::string witness = {}) {
    report_.checks.push_back({std::move(name), ok, ok ? std::string() : std::move(witness)});
  }

 private:
  VerificationReport& report_;
};

struct Setup {
  EllipsoidRing ring;
  KaehlerModule omega;
  ProjectiveModule module;
  std::vector<TangentField> fields;
};

Setup make_setup(const SuiteOptions& o) {
  EllipsoidRing ring(o.exponents);
  KaehlerModule omega(ring);
  ProjectiveModule module = omega.module();
  if (o.corrupt_fundamental_matrix) {
    const auto& m = module.M();
    module = ProjectiveModule(module.name(), m.with_entry(0, 0, m(0, 0) + Polynomial(1)), module.relations());
  }
  return {ring, omega, module, tangent_generators(ring)};
}

std::string fmt(const RingContext& ctx, const Polynomial& p) { return ctx.format(p); }

std::string fmt(const RingVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v.ctx()->format(v[i]);
  }
  return s + ")";
}

std::string fmt(const RingMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ", ";
      s += m.ctx()->format(m(i, j));
    }
  }
  return s + "]";
}

/// Random endomorphism of E represented by M R M.
RingMatrix random_endo(Sampler& rng, const ProjectiveModule& module) {
  auto r = rng.matrix(module.ctx(), module.generators(), 1);
  return module.M() * r * module.M();
}

/// Random element of E^* (x) E with two pairs; functionals are rows of r^T M.
EndoTensor random_tensor(Sampler& rng, const ProjectiveModule& module) {
  EndoTensor t;
  for (int p = 0; p < 2; ++p) {
    auto r = rng.vector(module.ctx(), module.generators(), 1);
    auto y = module.M().transpose() * r;
    t.pairs.emplace_back(y, rng.vector(module.ctx(), module.generators(), 1));
  }
  return t;
}

/// Product identity in Q[x-block, y-block]: prod (a_i(y) - a_i(x)) against the
/// signed subset sum of products.
bool diffformula_m1(Sampler& rng, std::size_t k, unsigned l, std::string& witness) {
  auto names = standard_names(k, 2);
  auto free2 = std::make_shared<const RingContext>(names, std::vector<Polynomial>{});
  std::vector<Polynomial> ys;
  for (std::size_t i = 0; i < k; ++i) ys.push_back(Polynomial::variable(k + i));
  std::vector<Polynomial> a, ay;
  for (unsigned i = 0; i < l; ++i) {
    a.push_back(rng.poly(*free2, k, 2));
    ay.push_back(a.back().substitute(ys));
  }
  Polynomial lhs(1);
  for (unsigned i = 0; i < l; ++i) lhs *= ay[i] - a[i];
  Polynomial rhs;
  for (unsigned mask = 0; mask < (1u << l); ++mask) {
    Polynomial term(1);
    int sign = 1;
    for (unsigned i = 0; i < l; ++i) {
      if (mask & (1u << i)) {
        term *= a[i];
        sign = -sign;
      } else {
        term *= ay[i];
      }
    }
    rhs += term * Rational(sign);
  }
  if (lhs == rhs) return true;
  witness = "l=" + std::to_string(l) + ": difference " + free2->format(lhs - rhs);
  return false;
}

/// Random operator generated by tangent fields and multiplications.
DiffOperator random_operator(Sampler& rng, const Setup& s, int factors) {
  const auto& ctx = s.ring.ctx();
  const std::size_t n = s.ring.k();
  DiffOperator op = DiffOperator::identity(ctx, n);
  for (int f = 0; f < factors; ++f) {
    DiffOperator next = rng.uniform(0, 2) == 0
                            ? DiffOperator::multiplication(ctx, n, rng.poly(*ctx, n, 1))
                            : DiffOperator::from_field(s.fields[static_cast<std::size_t>(
                                  rng.uniform(0, static_cast<long>(s.fields.size()) - 1))]);
    op = compose(op, next);
  }
  return op;
}

void suite_exactpoly(const SuiteOptions& o, Recorder& rec) {
  auto s = make_setup(o);
  Sampler rng(o.seed);
  const auto& ctx = *s.ring.ctx();
  const std::size_t k = s.ring.k();
  JetRing p2(s.ring, 2);
  const auto& jctx = *p2.ctx();

  const RingContext ambient(ctx.names(), {});
  bool idem = true, ringmap = true, division = true, shift = true;
  std::string w_idem, w_ring, w_div, w_shift;
  for (unsigned i = 0; i < o.samples; ++i) {
    auto f = rng.poly(ambient, k, 4, 4);
    auto g = rng.poly(ambient, k, 3, 3);
    auto rf = ctx.reduce(f);
    if (!(ctx.reduce(rf) == rf) && idem) {
      idem = false;
      w_idem = fmt(ctx, f);
    }
    if (ringmap && (!(ctx.reduce(f + g) == ctx.reduce(rf + ctx.reduce(g))) ||
                    !(ctx.reduce(f * g) == ctx.reduce(rf * ctx.reduce(g))))) {
      ringmap = false;
      w_ring = fmt(ctx, f) + " and " + fmt(ctx, g);
    }
    auto d = ctx.divide(f);
    Polynomial back = d.remainder;
    for (std::size_t q = 0; q < d.quotients.size(); ++q) back += d.quotients[q] * ctx.groebner()[q];
    if (division && (!(back == f) || !(d.remainder == rf))) {
      division = false;
      w_div = fmt(ctx, f);
    }
    auto lhs = taylor_shift(f * g, 2, jctx, k);
    auto rhs = (taylor_shift(f, 2, jctx, k) * taylor_shift(g, 2, jctx, k)).truncate(k, 2 * k, 2);
    if (shift && !(lhs == rhs)) {
      shift = false;
      w_shift = fmt(ctx, f) + " and " + fmt(ctx, g);
    }
  }
  rec.check("reduce is idempotent", idem, w_idem);
  rec.check("reduce respects sums and products", ringmap, w_ring);
  rec.check("division quotients reproduce the input", division, w_div);
  rec.check("taylor_shift is multiplicative up to truncation", shift, w_shift);

  for (const RingContext* c : {&ctx, &jctx}) {
    bool confluent = true;
    std::string w;
    const auto& gb = c->groebner();
    for (std::size_t i = 0; i < gb.size() && confluent; ++i) {
      for (std::size_t j = i + 1; j < gb.size() && confluent; ++j) {
        auto r = c->reduce(s_polynomial(gb[i], gb[j], c->order()));
        if (!r.is_zero()) {
          confluent = false;
          w = "S(" + std::to_string(i) + "," + std::to_string(j) + ") reduces to " + c->format(r);
        }
      }
    }
    rec.check(std::string("Groebner basis is confluent (") + (c == &ctx ? "A" : "P^2") + ")", confluent, w);
  }
}

void suite_linalg(const SuiteOptions& o, Recorder& rec) {
  auto s = make_setup(o);
  Sampler rng(o.seed);
  const auto& ctx = s.ring.ctx();
  const std::size_t k = s.ring.k();

  // Charpoly check ring: the ellipsoid ring with one extra variable lambda.
  auto names = ctx->names();
  names.push_back("lambda");
  auto lctx = std::make_shared<const RingContext>(names, std::vector<Polynomial>{s.ring.H()});
  const Polynomial lambda = Polynomial::variable(k);

  bool trace_ok = true, det_ok = true, cp_ok = true;
  std::string w_tr, w_det, w_cp;
  for (unsigned i = 0; i < o.samples; ++i) {
    auto a = rng.matrix(ctx, 3, 1);
    auto b = rng.matrix(ctx, 3, 1);
    if (trace_ok && !matrix_trace(commutator(a, b)).is_zero()) {
      trace_ok = false;
      w_tr = fmt(a) + " , " + fmt(b);
    }
    if (det_ok && !ctx->equal(det(a * b), det(a) * det(b))) {
      det_ok = false;
      w_det = fmt(a) + " , " + fmt(b);
    }
    auto cp = charpoly3(a);
    auto li = RingMatrix::identity(lctx, 3).scaled(lambda) - a.in(lctx);
    Polynomial expected = lambda.pow(3) - cp.trace * lambda.pow(2) + cp.minor_sum * lambda - cp.det;
    if (cp_ok && !lctx->equal(det(li), expected)) {
      cp_ok = false;
      w_cp = fmt(a);
    }
  }
  rec.check("trace of a commutator vanishes", trace_ok, w_tr);
  rec.check("det is multiplicative on 3x3 samples", det_ok, w_det);
  rec.check("charpoly3 matches det(lambda I - A)", cp_ok, w_cp);
}

void suite_ellipsoid(const SuiteOptions& o, Recorder& rec) {
  auto s = make_setup(o);
  const auto& m = s.module.M();
  const auto& ctx = s.ring.ctx();
  const std::size_t k = s.ring.k();
  rec.check("M^2 = M", (m * m) == m, "M^2 - M = " + fmt(m * m - m));
  rec.check("M G = 0", (m * s.omega.G()).is_zero(), "M G = " + fmt(m * s.omega.G()));
  bool rows = true;
  std::string w;
  for (std::size_t i = 0; i < k; ++i) {
    if (!dot(m.row(i), s.omega.G()).is_zero()) {
      rows = false;
      w = "row " + std::to_string(i + 1);
      break;
    }
  }
  rec.check("every row of M annihilates G", rows, w);
  auto tr = matrix_trace(m);
  rec.check("tr(M) = k - 1", ctx->equal(tr, Polynomial(static_cast<long>(k) - 1)), "tr(M) = " + fmt(*ctx, tr));
  auto mt = module_trace(s.module, RingMatrix::identity(ctx, k));
  rec.check("module_trace(id) = k - 1", ctx->equal(mt, Polynomial(static_cast<long>(k) - 1)),
            "module_trace(id) = " + fmt(*ctx, mt));

  bool tangent = true, bracket = true;
  std::string wt, wb;
  for (const auto& d : s.fields) {
    if (tangent && !d.apply(s.ring.H()).is_zero()) {
      tangent = false;
      wt = d.to_string();
    }
    for (const auto& e : s.fields) {
      auto b = lie_bracket(d, e);
      if (bracket && !b.apply(s.ring.H()).is_zero()) {
        bracket = false;
        wb = b.name();
      }
    }
  }
  rec.check("tangent generators kill H", tangent, wt);
  rec.check("Lie brackets of tangent fields are tangent", bracket, wb);

  auto pr = projectivity_report(s.module);
  for (const auto& c : pr.checks) rec.check("projectivity: " + c.name, c.passed, c.detail);
}

void suite_connection(const SuiteOptions& o, Recorder& rec) {
  auto s = make_setup(o);
  Sampler rng(o.seed);
  const auto& ctx = s.ring.ctx();
  const std::size_t k = s.ring.k();
  bool leibniz = true;
  std::string w;
  for (unsigned i = 0; i < o.samples && leibniz; ++i) {
    const auto& d = s.fields[i % s.fields.size()];
    auto a = rng.poly(*ctx, k, 2);
    auto v = rng.vector(ctx, k, 2);
    auto lhs = apply_nabla(s.module, d, v.scaled(a));
    auto rhs = s.module.canonical_rep(v.scaled(d.apply(a))) + apply_nabla(s.module, d, v).scaled(a);
    if (!s.module.same_class(lhs, rhs)) {
      leibniz = false;
      w = d.name() + " on a = " + fmt(*ctx, a) + ", v = " + fmt(v);
    }
  }
  rec.check("Leibniz rule for apply_nabla", leibniz, w);

  bool dual_ok = true;
  std::string wd;
  for (unsigned i = 0; i < o.samples && dual_ok; ++i) {
    const auto& d = s.fields[i % s.fields.size()];
    auto y = s.module.M().transpose() * rng.vector(ctx, k, 1);
    auto v = rng.vector(ctx, k, 1);
    // delta(y(v)) = (nabla^* y)(v) + y(nabla v)
    auto lhs = d.apply(dot(y, s.module.canonical_rep(v)));
    auto rhs = dot(dual_apply(s.module, d, y), s.module.canonical_rep(v)) + dot(y, apply_nabla(s.module, d, v));
    if (!ctx->equal(lhs, rhs)) {
      dual_ok = false;
      wd = d.name() + " on y = " + fmt(y);
    }
  }
  rec.check("dual connection is compatible with pairing", dual_ok, wd);

  bool omega_ok = true;
  std::string wo;
  for (unsigned i = 0; i < o.samples && omega_ok; ++i) {
    auto v = rng.vector(ctx, k, 2);
    auto nv = omega_valued_nabla(s.omega, v);
    for (const auto& d : s.fields) {
      if (!s.module.same_class(contract(s.omega, d, nv), apply_nabla(s.module, d, v))) {
        omega_ok = false;
        wo = d.name() + " on v = " + fmt(v);
        break;
      }
    }
  }
  rec.check("Omega-valued connection contracts to nabla(delta)", omega_ok, wo);
}

void suite_curvature(const SuiteOptions& o, Recorder& rec) {
  auto s = make_setup(o);
  const auto& ctx = s.ring.ctx();
  bool agree = true, alt = true, anti = true, trace = true, c1 = true;
  std::string wa, wl, wn, wt, wc;
  for (std::size_t i = 0; i < s.fields.size(); ++i) {
    const auto& d = s.fields[i];
    auto self = curvature(s.module, d, d, CurvatureMethod::Formula);
    if (alt && !self.is_zero()) {
      alt = false;
      wl = d.name();
    }
    for (std::size_t j = i + 1; j < s.fields.size(); ++j) {
      const auto& e = s.fields[j];
      auto f = curvature(s.module, d, e, CurvatureMethod::Formula);
      auto g = curvature(s.module, d, e, CurvatureMethod::Definitional);
      const std::string pair = "R(" + d.name() + "," + e.name() + ")";
      if (agree && !endo_equal(s.module, f, g)) {
        agree = false;
        wa = pair + ": formula " + fmt(f) + " vs definitional " + fmt(g);
      }
      if (anti && !(curvature(s.module, e, d, CurvatureMethod::Formula) + f).is_zero()) {
        anti = false;
        wn = pair;
      }
      if (trace && !matrix_trace(f).is_zero()) {
        trace = false;
        wt = pair + ": " + fmt(*ctx, matrix_trace(f));
      }
      auto tf = module_trace(s.module, f);
      auto tg = module_trace(s.module, g);
      if (c1 && !ctx->equal(tf, tg)) {
        c1 = false;
        wc = pair + ": " + fmt(*ctx, tf) + " vs " + fmt(*ctx, tg);
      }
    }
  }
  rec.check("formula and definitional curvature agree", agree, wa);
  rec.check("curvature is alternating", alt, wl);
  rec.check("curvature is antisymmetric", anti, wn);
  rec.check("trace of the formula curvature vanishes", trace, wt);
  rec.check("module traces agree along both routes", c1, wc);
}

void suite_endomorphisms(const SuiteOptions& o, Recorder& rec) {
  auto s = make_setup(o);
  Sampler rng(o.seed);
  const auto& mod = s.module;
  bool assoc = true, mult = true, ideal = true, equiv = true, ad = true;
  std::string w1, w2, w3, w4, w5;
  for (unsigned i = 0; i < o.samples; ++i) {
    auto a = random_tensor(rng, mod), b = random_tensor(rng, mod), c = random_tensor(rng, mod);
    if (assoc && !endo_equal(mod, rho_endo(mod, bullet(mod, a, bullet(mod, b, c))),
                             rho_endo(mod, bullet(mod, bullet(mod, a, b), c)))) {
      assoc = false;
      w1 = "sample " + std::to_string(i);
    }
    if (mult && !endo_equal(mod, rho_endo(mod, bullet(mod, a, b)), rho_endo(mod, a) * rho_endo(mod, b))) {
      mult = false;
      w2 = "sample " + std::to_string(i);
    }
    auto phi = random_endo(rng, mod);
    // phi o rho(y (x) v) = rho(y (x) phi v); rho(y (x) v) o phi = rho(phi^T y (x) v)
    EndoTensor left, right;
    for (const auto& [y, v] : a.pairs) {
      left.pairs.emplace_back(y, phi * v);
      right.pairs.emplace_back(phi.transpose() * y, v);
    }
    if (ideal && (!endo_equal(mod, phi * rho_endo(mod, a), rho_endo(mod, left)) ||
                  !endo_equal(mod, rho_endo(mod, a) * phi, rho_endo(mod, right)))) {
      ideal = false;
      w3 = "sample " + std::to_string(i);
    }
    const auto& d = s.fields[i % s.fields.size()];
    if (equiv && !endo_equal(mod, ad_apply(mod, d, rho_endo(mod, a)), rho_endo(mod, tensor_nabla(mod, d, a)))) {
      equiv = false;
      w4 = d.name() + ", sample " + std::to_string(i);
    }
  }
  // Curvature of the adjoint connection is the commutator with R.
  const unsigned endos = std::min(o.samples, 5u);
  for (unsigned i = 0; i < endos && ad; ++i) {
    auto phi = random_endo(rng, mod);
    for (std::size_t p = 0; p < s.fields.size() && ad; ++p) {
      for (std::size_t q = p + 1; q < s.fields.size() && ad; ++q) {
        const auto& d = s.fields[p];
        const auto& e = s.fields[q];
        auto lhs = ad_apply(mod, d, ad_apply(mod, e, phi)) - ad_apply(mod, e, ad_apply(mod, d, phi)) -
                   ad_apply(mod, lie_bracket(d, e), phi);
        auto r = curvature(mod, d, e, CurvatureMethod::Formula);
        if (!endo_equal(mod, lhs, commutator(r, phi))) {
          ad = false;
          w5 = "R(" + d.name() + "," + e.name() + "), sample " + std::to_string(i);
        }
      }
    }
  }
  rec.check("bullet product is associative", assoc, w1);
  rec.check("rho is multiplicative", mult, w2);
  rec.check("image of rho is a two-sided ideal", ideal, w3);
  rec.check("rho intertwines ad and the tensor connection", equiv, w4);
  rec.check("adjoint curvature is the commutator with R", ad, w5);
  auto witness = rho_endo(mod, identity_witness(mod));
  rec.check("identity witness maps to id_E", endo_equal(mod, witness, RingMatrix::identity(mod.ctx(), mod.generators())),
            "rho(witness) = " + fmt(witness));
}

void suite_weyl(const SuiteOptions& o, Recorder& rec) {
  auto s = make_setup(o);
  Sampler rng(o.seed);
  const auto& ctx = s.ring.ctx();
  const std::size_t k = s.ring.k();
  bool assoc = true, bound = true, comm = true, m2 = true, linear = true;
  std::string w1, w2, w3, w4, w5;
  for (unsigned i = 0; i < o.samples; ++i) {
    auto a = random_operator(rng, s, 1), b = random_operator(rng, s, 2), c = random_operator(rng, s, 1);
    if (assoc && !(compose(compose(a, b), c) == compose(a, compose(b, c)))) {
      assoc = false;
      w1 = a.to_string() + " ; " + b.to_string() + " ; " + c.to_string();
    }
    if (bound && compose(a, b).order() > a.order() + b.order()) {
      bound = false;
      w2 = a.to_string() + " ; " + b.to_string();
    }
    auto mul = rng.poly(*ctx, k, 2);
    if (comm && !b.is_zero() && iterated_commutator(b, {mul}).order() > b.order() - 1) {
      comm = false;
      w3 = b.to_string();
    }
    std::vector<Polynomial> as;
    for (int n = 0; n < 2; ++n) as.push_back(rng.poly(*ctx, k, 1));
    auto f = rng.poly(*ctx, k, 3);
    if (m2 && !ctx->equal(iterated_commutator(b, as).apply(f), subset_expansion(b, as, f))) {
      m2 = false;
      w4 = b.to_string();
    }
    auto lhs = rho_lift(b.scaled(mul), s.module);
    auto rhs = rho_lift(b, s.module);
    for (std::size_t e = 0; e < lhs.entries().size() && linear; ++e) {
      if (!(lhs.entries()[e] == rhs.entries()[e].scaled(mul))) {
        linear = false;
        w5 = b.to_string();
      }
    }
  }
  rec.check("compose is associative", assoc, w1);
  rec.check("order(S T) <= order(S) + order(T)", bound, w2);
  rec.check("commutator with a multiplier lowers the order", comm, w3);
  rec.check("iterated commutator matches the subset expansion", m2, w4);
  rec.check("rho_lift is left A-linear", linear, w5);

  // Operators with coefficients in (H) act as zero; a nonzero field does not.
  auto order1 = DiffOperator::from_field(s.fields.front());
  auto vanishing = iterated_commutator(order1, {rng.poly(*ctx, k, 1), rng.poly(*ctx, k, 1)});
  bool zero_acts = vanishing.is_zero();
  bool nonzero_acts = false;
  std::vector<Monomial> probes{Monomial()};
  for (unsigned d = 1; d <= 3; ++d) {
    std::vector<Monomial> next;
    for (const auto& m : probes) {
      if (m.degree() != d - 1) continue;
      for (std::size_t v = 0; v < k; ++v) next.push_back(m * Monomial::variable(v));
    }
    probes.insert(probes.end(), next.begin(), next.end());
  }
  for (const auto& m : probes) {
    if (!vanishing.apply(Polynomial::monomial(m)).is_zero()) zero_acts = false;
    if (!order1.apply(Polynomial::monomial(m)).is_zero()) nonzero_acts = true;
  }
  rec.check("zero normal form agrees with zero action on monomials of degree <= 3", zero_acts && nonzero_acts,
            vanishing.to_string());

  bool m1 = true;
  std::string w6;
  for (unsigned l = 1; l <= 3 && m1; ++l) {
    for (unsigned i = 0; i < o.samples && m1; ++i) m1 = diffformula_m1(rng, k, l, w6);
  }
  rec.check("product of d(a_i) expands as the signed subset sum", m1, w6);
}

/// Coassociativity of the comultiplication on jet(a, 3): both ways of
/// splitting into three first-order factors agree in the 4-block ring.
bool coassociative(const JetTower& tower, const Polynomial& a, std::string& witness) {
  const auto& base = tower.base();
  const std::size_t n = base.k();
  auto p3 = tower.ring(3);
  auto t21 = tower.tensor(2, 1);
  auto t12 = tower.tensor(1, 2);
  const auto& h = base.H();
  auto shifted = [&](std::size_t blocks) {
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial p;
      for (std::size_t b = 0; b < blocks; ++b) p += Polynomial::variable(b * n + i);
      images.push_back(p);
    }
    return h.substitute(images);
  };
  std::vector<Monomial> trunc;
  for (std::size_t b = 1; b < 4; ++b) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) trunc.push_back(Monomial::variable(b * n + i) * Monomial::variable(b * n + j));
    }
  }
  RingContext triple(standard_names(n, 4), {h, shifted(2), shifted(3), shifted(4)}, MonomialOrder{}, trunc);
  auto xi = jet(a, *p3);
  // (delta^{1,1} (x) id) o delta^{2,1}: (x, t, u) -> (x, t + u, w)
  // (id (x) delta^{1,1}) o delta^{1,2}: (x, t, u) -> (x, t, u + w)
  std::vector<Polynomial> left, right;
  for (std::size_t i = 0; i < n; ++i) {
    left.push_back(Polynomial::variable(i));
    right.push_back(Polynomial::variable(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    left.push_back(Polynomial::variable(n + i) + Polynomial::variable(2 * n + i));
    right.push_back(Polynomial::variable(n + i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    left.push_back(Polynomial::variable(3 * n + i));
    right.push_back(Polynomial::variable(2 * n + i) + Polynomial::variable(3 * n + i));
  }
  auto lhs = triple.reduce(comultiply(xi, *p3, *t21).substitute(left));
  auto rhs = triple.reduce(comultiply(xi, *p3, *t12).substitute(right));
  if (lhs == rhs) return true;
  witness = "a = " + base.ctx()->format(a) + ": " + triple.format(lhs) + " vs " + triple.format(rhs);
  return false;
}

void suite_jets(const SuiteOptions& o, Recorder& rec) {
  auto s = make_setup(o);
  Sampler rng(o.seed);
  const auto& ctx = s.ring.ctx();
  const std::size_t k = s.ring.k();
  auto tower = std::make_shared<const JetTower>(s.ring);
  constexpr unsigned kMaxOrder = 3;

  bool ringmap = true, coherent = true;
  std::string w1, w2;
  for (unsigned l = 0; l <= kMaxOrder; ++l) {
    auto pl = tower->ring(l);
    for (unsigned i = 0; i < o.samples; ++i) {
      auto a = rng.poly(*ctx, k, 2);
      auto b = rng.poly(*ctx, k, 2);
      if (ringmap && !(jet(a * b, *pl) == pl->ctx()->reduce(jet(a, *pl) * jet(b, *pl)))) {
        ringmap = false;
        w1 = "l=" + std::to_string(l) + ", a = " + fmt(*ctx, a) + ", b = " + fmt(*ctx, b);
      }
      if (l > 0 && coherent && !(project(jet(a, *pl), *pl, *tower->ring(l - 1)) == jet(a, *tower->ring(l - 1)))) {
        coherent = false;
        w2 = "l=" + std::to_string(l) + ", a = " + fmt(*ctx, a);
      }
    }
  }
  rec.check("jet is a ring map", ringmap, w1);
  rec.check("projection commutes with jet", coherent, w2);

  bool p0 = true;
  for (std::size_t j = 0; j < k; ++j) {
    auto v = s.module.generator(j);
    auto e = nabla_l(s.module, v, *tower->ring(0));
    auto c = s.module.canonical_rep(v);
    for (std::size_t i = 0; i < k; ++i) p0 = p0 && (e.components[i] == c[i]);
  }
  rec.check("nabla^0 is the canonical representative", p0, "differs on a generator");

  bool tower_ok = true;
  std::string w3;
  for (unsigned l = 1; l <= kMaxOrder && tower_ok; ++l) {
    auto pl = tower->ring(l);
    auto pm = tower->ring(l - 1);
    std::vector<RingVector> lifts;
    for (std::size_t j = 0; j < k; ++j) lifts.push_back(s.module.generator(j));
    for (unsigned i = 0; i < std::min(o.samples, 10u); ++i) lifts.push_back(rng.vector(ctx, k, 2));
    for (const auto& v : lifts) {
      auto lhs = project(nabla_l(s.module, v, *pl), *pl, *pm);
      auto rhs = nabla_l(s.module, v, *pm);
      if (!canonical(s.module, lhs - rhs).is_zero()) {
        tower_ok = false;
        w3 = "l=" + std::to_string(l) + ", v = " + fmt(v);
        break;
      }
    }
  }
  rec.check("(p_l (x) 1) nabla^l = nabla^(l-1)", tower_ok, w3);

  bool member = true;
  std::string w4;
  for (unsigned l = 0; l <= 2 && member; ++l) {
    auto pl = tower->ring(l);
    auto op = [&](const RingVector& v) { return nabla_l(s.module, v, *pl); };
    auto ev = diff_membership_test(op, s.module, static_cast<int>(l), std::min(o.samples, 5u), o.seed + l);
    if (!ev.passed) {
      member = false;
      w4 = "l=" + std::to_string(l) + ": " + ev.failure;
    }
  }
  rec.check("nabla^l passes the order-l membership test (sampled)", member, w4);

  // t-linear part of nabla^1 against the Omega-valued connection.
  auto p1 = tower->ring(1);
  bool linear = true;
  std::string w5;
  for (unsigned i = 0; i < o.samples && linear; ++i) {
    auto v = rng.vector(ctx, k, 2);
    auto e = nabla_l(s.module, v, *p1);
    std::vector<Polynomial> c(k * k);
    for (std::size_t comp = 0; comp < k; ++comp) {
      for (const auto& t : e.components[comp].terms()) {
        const auto tdeg = t.monomial.degree_in(k, 2 * k);
        if (tdeg != 1) continue;
        for (std::size_t j = 0; j < k; ++j) {
          if (t.monomial[k + j] == 1) {
            c[j * k + comp] += Polynomial::monomial(t.monomial / Monomial::variable(k + j), t.coeff);
          }
        }
      }
    }
    OmegaValuedElement candidate{RingMatrix(ctx, k, k, c)};
    if (!omega_equal(s.omega, candidate, omega_valued_nabla(s.omega, v))) {
      linear = false;
      w5 = "v = " + fmt(v);
    }
  }
  rec.check("t-linear part of nabla^1 is the Omega-valued connection", linear, w5);

  if (4 * k <= kMaxVariables) {
    bool coassoc = true;
    std::string w6;
    for (unsigned i = 0; i < std::min(o.samples, 5u) && coassoc; ++i) {
      coassoc = coassociative(*tower, rng.poly(*ctx, k, 2), w6);
    }
    rec.check("comultiplication is coassociative", coassoc, w6);
  }

  bool m1 = true;
  std::string w7;
  for (unsigned l = 1; l <= 3 && m1; ++l) m1 = diffformula_m1(rng, k, l, w7);
  rec.check("product of d(a_i) expands as the signed subset sum", m1, w7);

  auto free_conn = InfinityConnection::from_projective_basis(ProjectiveModule::free(ctx, k), tower, 3);
  auto probe = stratification_probe(free_conn, 3);
  rec.check("free module has vanishing (l,k)-curvature", probe.flat(),
            probe.witness() ? probe.witness()->value : std::string());
}

void suite_mcm(const SuiteOptions&, Recorder& rec) {
  for (unsigned m = 2; m <= 3; ++m) {
    for (unsigned n = 2; n <= 3; ++n) {
      for (unsigned k = 0; k < m; ++k) {
        for (unsigned l = 0; l < n; ++l) {
          const std::string label = "(m,n,k,l) = (" + std::to_string(m) + "," + std::to_string(n) + "," +
                                    std::to_string(k) + "," + std::to_string(l) + ")";
          try {
            auto report = verify_factorization(build_factorization(m, n, k, l));
            std::string w;
            for (const auto& c : report.checks) {
              if (!c.passed) w = c.name + ": " + c.detail;
            }
            rec.check("factorization " + label, report.passed(), w);
          } catch (const std::logic_error& e) {
            rec.check("factorization " + label, false, e.what());
          }
        }
      }
    }
  }
}

using SuiteFn = void (*)(const SuiteOptions&, Recorder&);

const std::map<std::string, SuiteFn>& suite_table() {
  static const std::map<std::string, SuiteFn> table{
      {"exactpoly", suite_exactpoly},   {"linalg", suite_linalg},
      {"ellipsoid", suite_ellipsoid},   {"connection", suite_connection},
      {"curvature", suite_curvature},   {"endomorphisms", suite_endomorphisms},
      {"weyl", suite_weyl},             {"jets", suite_jets},
      {"mcm", suite_mcm},
  };
  return table;
}

}  // namespace

bool VerificationReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["ring"] = ring;
  j["seed"] = seed;
  j["samples"] = samples;
  j["passed"] = passed();
  auto& arr = j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) arr.push_back({{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
  if (seconds) j["seconds"] = *seconds;
  return j;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "suite " << suite << " ring " << ring << " seed " << seed << " samples " << samples << '\n';
  for (const auto& c : checks) {
    out << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name << '\n';
    if (!c.passed && !c.witness.empty()) out << "         witness: " << c.witness << '\n';
  }
  if (seconds) out << "  time " << *seconds << " s\n";
  out << "  " << (passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"exactpoly", "linalg",        "ellipsoid", "connection", "curvature",
                                              "endomorphisms", "weyl", "jets", "mcm"};
  return names;
}

VerificationReport run_suite(const std::string& name, const SuiteOptions& options) {
  const auto& table = suite_table();
  auto it = table.find(name);
  if (it == table.end()) throw InputError("unknown suite '" + name + "'");
  EllipsoidRing check(options.exponents);
  VerificationReport report;
  report.suite = name;
  report.ring = check.label();
  report.seed = options.seed;
  report.samples = options.samples;
  const auto start = std::chrono::steady_clock::now();
  Recorder rec(report);
  it->second(options, rec);
  if (options.timing) {
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return report;
}

nlohmann::json ring_report(const std::vector<unsigned>& exponents) {
  EllipsoidRing ring(exponents);
  KaehlerModule omega(ring);
  const auto& ctx = *ring.ctx();
  const auto fields = tangent_generators(ring);
  nlohmann::json j;
  j["exponents"] = exponents;
  j["H"] = ctx.format(ring.H());
  j["M"] = to_json(omega.M());
  j["G"] = to_json(omega.G());
  j["matrix_trace_M"] = ctx.format(matrix_trace(omega.M()));
  auto& tg = j["tangent_generators"] = nlohmann::json::array();
  for (const auto& f : fields) tg.push_back({{"name", f.name()}, {"field", f.to_string()}});
  auto& curv = j["curvature"] = nlohmann::json::array();
  for (std::size_t a = 0; a < fields.size(); ++a) {
    for (std::size_t b = a + 1; b < fields.size(); ++b) {
      auto r = curvature(omega.module(), fields[a], fields[b], CurvatureMethod::Formula);
      nlohmann::json entry{{"pair", {fields[a].name(), fields[b].name()}},
                           {"R", to_json(r)},
                           {"matrix_trace", ctx.format(matrix_trace(r))},
                           {"module_trace", ctx.format(module_trace(omega.module(), r))}};
      if (ring.k() == 3) {
        auto cp = charpoly3(r);
        entry["charpoly3"] = {{"trace", ctx.format(cp.trace)},
                              {"p_A", ctx.format(cp.p_a)},
                              {"minor_sum", ctx.format(cp.minor_sum)},
                              {"det", ctx.format(cp.det)}};
      }
      curv.push_back(entry);
    }
  }
  return j;
}

std::string ring_report_text(const nlohmann::json& j) {
  std::ostringstream out;
  auto matrix = [&](const nlohmann::json& m, const std::string& indent) {
    const auto rows = m["rows"].get<std::size_t>();
    const auto cols = m["cols"].get<std::size_t>();
    for (std::size_t i = 0; i < rows; ++i) {
      out << indent << '[';
      for (std::size_t c = 0; c < cols; ++c) {
        if (c) out << ", ";
        out << m["entries"][i][c].get<std::string>();
      }
      out << "]\n";
    }
  };
  out << "H = " << j["H"].get<std::string>() << '\n';
  out << "M =\n";
  matrix(j["M"], "  ");
  out << "G = (";
  for (std::size_t i = 0; i < j["G"].size(); ++i) out << (i ? ", " : "") << j["G"][i].get<std::string>();
  out << ")\n";
  out << "tr(M) = " << j["matrix_trace_M"].get<std::string>() << '\n';
  out << "tangent generators:\n";
  for (const auto& f : j["tangent_generators"]) {
    out << "  " << f["name"].get<std::string>() << " = " << f["field"].get<std::string>() << '\n';
  }
  for (const auto& c : j["curvature"]) {
    out << "R(" << c["pair"][0].get<std::string>() << "," << c["pair"][1].get<std::string>() << ") =\n";
    matrix(c["R"], "  ");
    out << "  matrix trace = " << c["matrix_trace"].get<std::string>() << '\n';
    out << "  module trace = " << c["module_trace"].get<std::string>() << '\n';
    if (c.contains("charpoly3")) {
      const auto& cp = c["charpoly3"];
      out << "  charpoly3: trace = " << cp["trace"].get<std::string>() << ", p_A = " << cp["p_A"].get<std::string>()
          << ", minor sum = " << cp["minor_sum"].get<std::string>() << ", det = " << cp["det"].get<std::string>()
          << '\n';
    }
  }
  return out.str();
}

nlohmann::json jets_report(const std::vector<unsigned>& exponents, unsigned free_rank, unsigned l, unsigned k,
                           unsigned degree_cap) {
  if (l < 1 || k < 1) throw InputError("jets: l and k must be >= 1");
  EllipsoidRing ring(exponents);
  auto tower = std::make_shared<const JetTower>(ring, degree_cap);
  ProjectiveModule module =
      free_rank > 0 ? ProjectiveModule::free(ring.ctx(), free_rank) : KaehlerModule(ring).module();
  const std::string gen = free_rank > 0 ? "e" : "dx";
  auto conn = InfinityConnection::from_projective_basis(module, tower, l + k);
  auto probe = curvature_probe(conn, l, k);
  auto label = [&](const StratificationProbe::Entry& e) {
    return "K^(" + std::to_string(e.l) + "," + std::to_string(e.k) + ")(" + gen + std::to_string(e.generator + 1) +
           ")";
  };
  nlohmann::json j;
  j["ring"] = ring.label();
  j["module"] = module.name();
  j["l"] = l;
  j["k"] = k;
  j["flat"] = probe.flat();
  auto& entries = j["entries"] = nlohmann::json::array();
  for (const auto& e : probe.entries) entries.push_back({{"name", label(e)}, {"zero", e.zero}, {"value", e.value}});
  if (const auto* w = probe.witness()) j["witness"] = {{"name", label(*w)}, {"value", w->value}};
  return j;
}

std::string jets_report_text(const nlohmann::json& j) {
  std::ostringstream out;
  out << "ring " << j["ring"].get<std::string>() << ", module " << j["module"].get<std::string>() << '\n';
  for (const auto& e : j["entries"]) {
    out << "  " << e["name"].get<std::string>() << " = " << e["value"].get<std::string>() << '\n';
  }
  if (j.contains("witness")) {
    out << "non-flat: witness " << j["witness"]["name"].get<std::string>() << " = "
        << j["witness"]["value"].get<std::string>() << '\n';
  } else {
    out << "flat: stratification candidate up to order " << j["l"].get<unsigned>() + j["k"].get<unsigned>() << '\n';
  }
  return out.str();
}

nlohmann::json mcm_report(unsigned m, unsigned n, unsigned k, unsigned l) {
  auto pair = build_factorization(m, n, k, l);
  auto report = verify_factorization(pair);
  nlohmann::json j;
  j["f"] = pair.ctx->format(pair.f);
  j["phi"] = to_json(pair.phi);
  j["psi"] = to_json(pair.psi);
  j["passed"] = report.passed();
  auto& checks = j["checks"] = nlohmann::json::array();
  for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return j;
}

std::string mcm_report_text(const nlohmann::json& j) {
  std::ostringstream out;
  auto matrix = [&](const char* name, const nlohmann::json& m) {
    out << name << " =\n";
    for (const auto& row : m["entries"]) {
      out << "  [";
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? ", " : "") << row[c].get<std::string>();
      out << "]\n";
    }
  };
  out << "f = " << j["f"].get<std::string>() << '\n';
  matrix("phi", j["phi"]);
  matrix("psi", j["psi"]);
  for (const auto& c : j["checks"]) {
    out << "  [" << (c["passed"].get<bool>() ? "PASS" : "FAIL") << "] " << c["name"].get<std::string>();
    if (!c["passed"].get<bool>()) out << ": " << c["detail"].get<std::string>();
    out << '\n';
  }
  out << (j["passed"].get<bool>() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace projconn
