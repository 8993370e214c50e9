#include "projconn/jets.hpp"

#include <sstream>

#include "projconn/error.hpp"
#include "projconn/sampling.hpp"

namespace projconn {

namespace {

/// All monomials of total degree d in variables [first, first + n).
std::vector<Monomial> monomials_of_degree(std::size_t first, std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  Monomial m;
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == n) {
      m.set(first + i, left);
      out.push_back(m);
      m.set(first + i, 0);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      m.set(first + i, e);
      rec(i + 1, left - e);
    }
    m.set(first + i, 0);
  };
  rec(0, d);
  return out;
}

std::vector<Polynomial> shift_images(std::size_t k, std::size_t blocks) {
  // x_i -> x_i + t_i (+ u_i when blocks == 3)
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < k; ++i) {
    Polynomial p = Polynomial::variable(i);
    for (std::size_t b = 1; b < blocks; ++b) p += Polynomial::variable(b * k + i);
    images.push_back(p);
  }
  return images;
}

void require_same_module_ring(const ProjectiveModule& module, const EllipsoidRing& base) {
  if (module.ctx() != base.ctx()) throw InputError("module and jet tower use different base rings");
}

}  // namespace

JetRing::JetRing(const EllipsoidRing& base, unsigned order, unsigned degree_cap) : k_(base.k()), order_(order) {
  const auto& h = base.H();
  auto shifted = h.substitute(shift_images(k_, 2)).truncate(k_, 2 * k_, order);
  ctx_ = std::make_shared<const RingContext>(standard_names(k_, 2), std::vector<Polynomial>{h, shifted},
                                             MonomialOrder{}, monomials_of_degree(k_, k_, order + 1), degree_cap);
}

JetTensorRing::JetTensorRing(const EllipsoidRing& base, unsigned l, unsigned k, unsigned degree_cap)
    : nvars_(base.k()), l_(l), k_order_(k) {
  const std::size_t n = nvars_;
  const auto& h = base.H();
  auto h1 = h.substitute(shift_images(n, 2)).truncate(n, 2 * n, l);
  auto h2 = h.substitute(shift_images(n, 3)).truncate(n, 2 * n, l).truncate(2 * n, 3 * n, k);
  auto trunc = monomials_of_degree(n, n, l + 1);
  auto more = monomials_of_degree(2 * n, n, k + 1);
  trunc.insert(trunc.end(), more.begin(), more.end());
  ctx_ = std::make_shared<const RingContext>(standard_names(n, 3), std::vector<Polynomial>{h, h1, h2},
                                             MonomialOrder{}, std::move(trunc), degree_cap);
}

std::shared_ptr<const JetRing> JetTower::ring(unsigned l) const {
  {
    std::lock_guard lock(mutex_);
    auto it = rings_.find(l);
    if (it != rings_.end()) return it->second;
  }
  auto built = std::make_shared<const JetRing>(base_, l, degree_cap_);
  std::lock_guard lock(mutex_);
  return rings_.emplace(l, std::move(built)).first->second;
}

std::shared_ptr<const JetTensorRing> JetTower::tensor(unsigned l, unsigned k) const {
  const auto key = std::make_pair(l, k);
  {
    std::lock_guard lock(mutex_);
    auto it = tensors_.find(key);
    if (it != tensors_.end()) return it->second;
  }
  auto built = std::make_shared<const JetTensorRing>(base_, l, k, degree_cap_);
  auto big = ring(l + k);
  auto right = ring(k);
  for (const auto& g : big->ctx()->groebner()) {
    if (!comultiply(g, *big, *built).is_zero()) {
      throw std::logic_error("comultiplication does not preserve the jet ideal");
    }
  }
  for (const auto& g : right->ctx()->groebner()) {
    if (!glue_right(g, *built).is_zero()) {
      throw std::logic_error("right gluing does not preserve the jet ideal");
    }
  }
  std::lock_guard lock(mutex_);
  return tensors_.emplace(key, std::move(built)).first->second;
}

Polynomial jet(const Polynomial& a, const JetRing& ring) {
  return ring.ctx()->reduce(taylor_shift(a, ring.order(), *ring.ctx(), ring.k()));
}

Polynomial project(const Polynomial& xi, const JetRing& from, const JetRing& to) {
  if (from.order() == 0) throw InputError("project: P^0 has no lower order");
  if (to.order() + 1 != from.order() || to.k() != from.k()) {
    throw InputError("project: target must be the jet ring of order l - 1");
  }
  from.ctx()->check_variables(xi);
  return to.ctx()->reduce(xi);
}

Polynomial comultiply(const Polynomial& xi, const JetRing& from, const JetTensorRing& to) {
  if (from.order() != to.left_order() + to.right_order() || from.k() != to.k()) {
    throw InputError("comultiply: jet order must equal l + k");
  }
  from.ctx()->check_variables(xi);
  const std::size_t n = from.k();
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(Polynomial::variable(i));
  for (std::size_t i = 0; i < n; ++i) {
    images.push_back(Polynomial::variable(n + i) + Polynomial::variable(2 * n + i));
  }
  return to.ctx()->reduce(xi.substitute(images));
}

Polynomial glue_right(const Polynomial& eta, const JetTensorRing& to) {
  const std::size_t n = to.k();
  if (eta.last_variable() >= static_cast<int>(2 * n)) {
    throw InputError("glue_right: argument must live on (x, t)");
  }
  auto images = shift_images(n, 2);
  for (std::size_t i = 0; i < n; ++i) images.push_back(Polynomial::variable(2 * n + i));
  return to.ctx()->reduce(eta.substitute(images));
}

bool JetModuleElement::is_zero() const {
  for (const auto& c : components) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::string JetModuleElement::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out << ", ";
    out << ctx->format(components[i]);
  }
  out << ')';
  return out.str();
}

JetModuleElement canonical(const ProjectiveModule& module, JetModuleElement e) {
  const std::size_t n = module.generators();
  if (e.components.size() != n) throw InputError("canonical: length mismatch");
  std::vector<Polynomial> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial s;
    for (std::size_t j = 0; j < n; ++j) s += module.M()(i, j) * e.components[j];
    out[i] = e.ctx->reduce(s);
  }
  return {e.ctx, std::move(out)};
}

JetModuleElement operator-(const JetModuleElement& a, const JetModuleElement& b) {
  if (a.ctx != b.ctx || a.components.size() != b.components.size()) {
    throw InputError("jet module elements live in different spaces");
  }
  std::vector<Polynomial> out(a.components.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.ctx->reduce(a.components[i] - b.components[i]);
  return {a.ctx, std::move(out)};
}

JetModuleElement nabla_l(const ProjectiveModule& module, const RingVector& v, const JetRing& ring) {
  if (v.size() != module.generators()) throw InputError("nabla_l: length mismatch");
  if (v.ctx() != module.ctx()) throw InputError("nabla_l: ring mismatch");
  const auto mv = module.M() * v;
  std::vector<Polynomial> comps;
  for (const auto& c : mv.entries()) comps.push_back(jet(c, ring));
  return canonical(module, {ring.ctx(), std::move(comps)});
}

JetModuleElement project(const JetModuleElement& e, const JetRing& from, const JetRing& to) {
  if (e.ctx != from.ctx()) throw InputError("project: element is not in the source jet ring");
  std::vector<Polynomial> out;
  for (const auto& c : e.components) out.push_back(project(c, from, to));
  return {to.ctx(), std::move(out)};
}

MembershipEvidence diff_membership_test(const ModuleMap& op, const ProjectiveModule& module, int l,
                                        unsigned samples, std::uint64_t seed) {
  if (samples == 0) throw InputError("diff_membership_test: samples must be >= 1");
  if (l < -1) throw InputError("diff_membership_test: order must be >= -1");
  const auto& ctx = module.ctx();
  const std::size_t nv = ctx->nvars();
  const std::size_t m = static_cast<std::size_t>(l + 1);
  Sampler rng(seed);
  MembershipEvidence ev;
  for (unsigned s = 0; s < samples; ++s) {
    std::vector<Polynomial> a;
    for (std::size_t i = 0; i < m; ++i) a.push_back(rng.poly(*ctx, nv, 2));
    auto v = rng.vector(ctx, module.generators(), 2);
    JetModuleElement total;
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
      Polynomial inside(1), outside(1);
      int sign = 1;
      for (std::size_t i = 0; i < m; ++i) {
        if (mask & (std::size_t{1} << i)) {
          outside *= a[i];
          sign = -sign;
        } else {
          inside *= a[i];
        }
      }
      auto image = op(v.scaled(inside));
      if (total.ctx == nullptr) {
        total.ctx = image.ctx;
        total.components.assign(image.components.size(), Polynomial());
      }
      for (std::size_t i = 0; i < image.components.size(); ++i) {
        total.components[i] += image.components[i] * outside * Rational(sign);
      }
    }
    for (auto& c : total.components) c = total.ctx->reduce(c);
    ++ev.samples;
    auto result = canonical(module, std::move(total));
    if (!result.is_zero()) {
      ev.passed = false;
      ev.failure = "sample " + std::to_string(s) + ": commutator leaves " + result.to_string();
      return ev;
    }
  }
  return ev;
}

InfinityConnection::InfinityConnection(ProjectiveModule module, std::shared_ptr<const JetTower> tower,
                                       std::vector<RingMatrix> theta)
    : module_(std::move(module)), tower_(std::move(tower)), theta_(std::move(theta)) {
  if (!tower_) throw InputError("infinity connection needs a jet tower");
  require_same_module_ring(module_, tower_->base());
  if (theta_.empty()) throw InputError("infinity connection needs theta_0");
  const std::size_t n = module_.generators();
  for (std::size_t l = 0; l < theta_.size(); ++l) {
    const auto& t = theta_[l];
    if (t.rows() != n || t.cols() != n) throw InputError("theta matrices must be n x n");
    if (t.ctx() != tower_->ring(static_cast<unsigned>(l))->ctx()) {
      throw InputError("theta_" + std::to_string(l) + " must live in the jet ring of order " +
                       std::to_string(l));
    }
  }
  auto ctx0 = tower_->ring(0)->ctx();
  auto m0 = module_.M().in(ctx0);
  if (!(m0 * (theta_[0] - RingMatrix::identity(ctx0, n)) * m0).is_zero()) {
    throw InputError("theta_0 is not the identity");
  }
}

InfinityConnection InfinityConnection::from_projective_basis(const ProjectiveModule& module,
                                                             std::shared_ptr<const JetTower> tower,
                                                             unsigned max_order) {
  if (!tower) throw InputError("infinity connection needs a jet tower");
  require_same_module_ring(module, tower->base());
  std::vector<RingMatrix> theta;
  const std::size_t n = module.generators();
  for (unsigned l = 0; l <= max_order; ++l) {
    auto ring = tower->ring(l);
    theta.push_back(RingMatrix::generate(ring->ctx(), n, n, [&](std::size_t i, std::size_t j) {
      return jet(module.M()(i, j), *ring);
    }));
  }
  return InfinityConnection(module, std::move(tower), std::move(theta));
}

JetModuleElement InfinityConnection::apply(unsigned l, const RingVector& v) const {
  if (l > max_order()) throw InputError("theta_" + std::to_string(l) + " is not defined");
  if (v.size() != module_.generators() || v.ctx() != module_.ctx()) {
    throw InputError("theta: argument is not a lift in the module");
  }
  auto ring = tower_->ring(l);
  std::vector<Polynomial> jv;
  for (const auto& c : v.entries()) jv.push_back(jet(c, *ring));
  auto image = theta_[l] * RingVector(ring->ctx(), std::move(jv));
  return canonical(module_, {ring->ctx(), image.entries()});
}

JetModuleElement lk_curvature(const InfinityConnection& conn, unsigned l, unsigned k, const RingVector& v) {
  if (l < 1 || k < 1) throw InputError("lk_curvature: l and k must be >= 1");
  if (l + k > conn.max_order()) {
    throw InputError("lk_curvature: l + k exceeds the order of the infinity connection");
  }
  const auto& tower = conn.tower();
  auto big = tower.ring(l + k);
  auto tensor = tower.tensor(l, k);
  const auto& tctx = tensor->ctx();
  const std::size_t n = conn.module().generators();

  auto top = conn.apply(l + k, v);
  auto eta = conn.apply(k, v);
  const auto& theta_l = conn.theta(l);

  std::vector<Polynomial> diff(n);
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial phi1;
    for (std::size_t j = 0; j < n; ++j) phi1 += theta_l(i, j) * glue_right(eta.components[j], *tensor);
    diff[i] = tctx->reduce(phi1) - comultiply(top.components[i], *big, *tensor);
  }
  return canonical(conn.module(), {tctx, std::move(diff)});
}

bool StratificationProbe::flat() const { return witness() == nullptr; }

const StratificationProbe::Entry* StratificationProbe::witness() const {
  for (const auto& e : entries) {
    if (!e.zero) return &e;
  }
  return nullptr;
}

namespace {

void probe_pair(const InfinityConnection& conn, unsigned l, unsigned k, StratificationProbe& report) {
  const auto& module = conn.module();
  for (std::size_t j = 0; j < module.generators(); ++j) {
    auto value = lk_curvature(conn, l, k, module.generator(j));
    report.entries.push_back({l, k, j, value.is_zero(), value.to_string()});
  }
}

}  // namespace

StratificationProbe stratification_probe(const InfinityConnection& conn, unsigned max_total) {
  if (max_total < 2) throw InputError("stratification_probe: L must be >= 2");
  if (max_total > conn.max_order()) throw InputError("stratification_probe: L exceeds the connection order");
  StratificationProbe report;
  for (unsigned total = 2; total <= max_total; ++total) {
    for (unsigned l = 1; l < total; ++l) probe_pair(conn, l, total - l, report);
  }
  return report;
}

StratificationProbe curvature_probe(const InfinityConnection& conn, unsigned l, unsigned k) {
  if (l < 1 || k < 1) throw InputError("curvature_probe: l and k must be >= 1");
  if (l + k > conn.max_order()) throw InputError("curvature_probe: l + k exceeds the connection order");
  StratificationProbe report;
  for (unsigned a = 1; a <= l; ++a) {
    for (unsigned b = 1; b <= k; ++b) probe_pair(conn, a, b, report);
  }
  return report;
}

}  // namespace projconn
