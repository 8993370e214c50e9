#include "doctest.h"
#include "support.hpp"

#include "projconn/connection.hpp"
#include "projconn/error.hpp"
#include "projconn/jets.hpp"

using namespace projconn;
using namespace testing_support;

namespace {

struct Setup {
  EllipsoidRing ring{{2, 2, 2}};
  KaehlerModule om{ring};
  std::shared_ptr<const JetTower> tower = std::make_shared<const JetTower>(ring);
  const RingPtr& ctx() const { return ring.ctx(); }
};

std::vector<Polynomial> shift(std::size_t k, std::size_t blocks) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < k; ++i) {
    Polynomial p;
    for (std::size_t b = 0; b < blocks; ++b) p += Polynomial::variable(b * k + i);
    images.push_back(p);
  }
  return images;
}

}  // namespace

TEST_CASE("jet ring examples") {
  Setup s;
  auto p1 = s.tower->ring(1);
  const auto& c = *p1->ctx();
  CHECK(jet(Polynomial::variable(0), *p1) == c.parse("x1 + t1"));
  CHECK(jet(Polynomial(5), *s.tower->ring(3)) == Polynomial(5));
  for (unsigned l = 0; l <= 3; ++l) CHECK(jet(s.ctx()->parse("x1^2 + x2^2 + x3^2"), *s.tower->ring(l)) == Polynomial(1));
  CHECK(c.reduce(s.ring.H()).is_zero());
  CHECK(c.reduce(c.parse("t1*t3")).is_zero());
  // P^0 is A.
  auto p0 = s.tower->ring(0);
  CHECK(p0->ctx()->reduce(p0->ctx()->parse("t2")).is_zero());
  CHECK(p0->ctx()->reduce(p0->ctx()->parse("x1^3")) == s.ctx()->reduce(s.ctx()->parse("x1^3")));
  CHECK(s.tower->ring(2) == s.tower->ring(2));
}

TEST_CASE("projection") {
  Setup s;
  auto p1 = s.tower->ring(1), p0 = s.tower->ring(0), p2 = s.tower->ring(2);
  CHECK(project(jet(Polynomial::variable(0), *p1), *p1, *p0) == Polynomial::variable(0));
  CHECK(project(p2->ctx()->parse("t1*t2"), *p2, *p1).is_zero());
  CHECK_THROWS_AS(project(Polynomial(1), *p0, *p0), InputError);
  CHECK_THROWS_AS(project(Polynomial(1), *p2, *p0), InputError);
  SplitMix g(53);
  for (unsigned l = 1; l <= 3; ++l) {
    auto hi = s.tower->ring(l), lo = s.tower->ring(l - 1);
    for (int i = 0; i < 20; ++i) {
      auto a = s.ctx()->reduce(random_poly(g, 3, 3));
      auto b = s.ctx()->reduce(random_poly(g, 3, 2));
      CHECK(project(jet(a, *hi), *hi, *lo) == jet(a, *lo));
      CHECK(jet(a * b, *hi) == hi->ctx()->reduce(jet(a, *hi) * jet(b, *hi)));
    }
  }
}

TEST_CASE("higher connections") {
  Setup s;
  const auto& mod = s.om.module();
  SplitMix g(59);
  for (std::size_t j = 0; j < 3; ++j) {
    auto e = mod.generator(j);
    auto n0 = nabla_l(mod, e, *s.tower->ring(0));
    CHECK(n0.components == mod.canonical_rep(e).entries());
  }
  for (unsigned l = 1; l <= 3; ++l) {
    auto hi = s.tower->ring(l), lo = s.tower->ring(l - 1);
    std::vector<RingVector> lifts;
    for (std::size_t j = 0; j < 3; ++j) lifts.push_back(mod.generator(j));
    for (int i = 0; i < 10; ++i) lifts.push_back(random_vector(g, s.ctx(), 3, 3, 2));
    for (const auto& v : lifts) {
      CHECK(canonical(mod, project(nabla_l(mod, v, *hi), *hi, *lo) - nabla_l(mod, v, *lo)).is_zero());
    }
  }
  CHECK_THROWS_AS(nabla_l(mod, RingVector::zero(s.ctx(), 2), *s.tower->ring(1)), InputError);
}

TEST_CASE("t-linear part of nabla^1 is the Omega-valued connection") {
  Setup s;
  SplitMix g(61);
  auto p1 = s.tower->ring(1);
  for (int i = 0; i < 10; ++i) {
    auto v = random_vector(g, s.ctx(), 3, 3, 2);
    auto e = nabla_l(s.om.module(), v, *p1);
    std::vector<Polynomial> c(9);
    for (std::size_t comp = 0; comp < 3; ++comp) {
      for (const auto& t : e.components[comp].terms()) {
        for (std::size_t j = 0; j < 3; ++j) {
          if (t.monomial[3 + j] == 1) c[j * 3 + comp] += Polynomial::monomial(t.monomial / Monomial::variable(3 + j), t.coeff);
        }
      }
    }
    CHECK(omega_equal(s.om, OmegaValuedElement{RingMatrix(s.ctx(), 3, 3, c)}, omega_valued_nabla(s.om, v)));
  }
}

TEST_CASE("membership in Diff^l (sampled)") {
  Setup s;
  const auto& mod = s.om.module();
  auto p0 = s.tower->ring(0);
  auto zero = [&](const RingVector&) { return JetModuleElement{p0->ctx(), {0, 0, 0}}; };
  CHECK(diff_membership_test(zero, mod, -1, 5, 1).passed);
  auto a = s.ctx()->parse("x1 + x2*x3");
  auto times_a = [&](const RingVector& v) {
    return canonical(mod, JetModuleElement{p0->ctx(), v.scaled(a).entries()});
  };
  CHECK_FALSE(diff_membership_test(times_a, mod, -1, 5, 1).passed);
  CHECK(diff_membership_test(times_a, mod, 0, 5, 1).passed);
  for (unsigned l = 0; l <= 2; ++l) {
    auto pl = s.tower->ring(l);
    auto op = [&](const RingVector& v) { return nabla_l(mod, v, *pl); };
    auto ev = diff_membership_test(op, mod, static_cast<int>(l), 5, 7);
    CHECK(ev.passed);
    CHECK(ev.samples == 5);
    if (l > 0) CHECK_FALSE(diff_membership_test(op, mod, static_cast<int>(l) - 1, 5, 7).passed);
  }
  CHECK_THROWS_AS(diff_membership_test(zero, mod, 0, 0, 1), InputError);
}

TEST_CASE("comultiplication") {
  Setup s;
  auto p2 = s.tower->ring(2);
  auto t11 = s.tower->tensor(1, 1);
  const auto& tc = *t11->ctx();
  CHECK(comultiply(Polynomial(1), *p2, *t11) == Polynomial(1));
  SplitMix g(67);
  for (int i = 0; i < 10; ++i) {
    auto a = s.ctx()->reduce(random_poly(g, 3, 3));
    CHECK(comultiply(jet(a, *p2), *p2, *t11) == tc.reduce(a.substitute(shift(3, 3))));
    auto b = s.ctx()->reduce(random_poly(g, 3, 2));
    auto xi = p2->ctx()->reduce(random_poly(g, 6, 2));
    CHECK(comultiply(p2->ctx()->reduce(b * xi), *p2, *t11) == tc.reduce(b * comultiply(xi, *p2, *t11)));
  }
  CHECK_THROWS_AS(comultiply(Polynomial(1), *s.tower->ring(3), *t11), InputError);
  // Ideal generators go to zero, so the map is well defined.
  CHECK(tc.reduce(s.ring.H().substitute(shift(3, 3))).is_zero());
}

TEST_CASE("comultiplication is coassociative") {
  Setup s;
  const std::size_t n = 3;
  auto p3 = s.tower->ring(3);
  auto t21 = s.tower->tensor(2, 1);
  auto t12 = s.tower->tensor(1, 2);
  std::vector<Monomial> trunc;
  for (std::size_t b = 1; b < 4; ++b) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) trunc.push_back(Monomial::variable(b * n + i) * Monomial::variable(b * n + j));
    }
  }
  const auto& h = s.ring.H();
  RingContext triple(standard_names(n, 4), {h, h.substitute(shift(n, 2)), h.substitute(shift(n, 3)), h.substitute(shift(n, 4))},
                     {}, trunc);
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
  SplitMix g(71);
  for (int i = 0; i < 5; ++i) {
    auto xi = jet(s.ctx()->reduce(random_poly(g, 3, 3)), *p3);
    CHECK(triple.reduce(comultiply(xi, *p3, *t21).substitute(left)) ==
          triple.reduce(comultiply(xi, *p3, *t12).substitute(right)));
  }
}

TEST_CASE("(l,k)-curvature of the free module vanishes") {
  Setup s;
  auto conn = InfinityConnection::from_projective_basis(ProjectiveModule::free(s.ctx(), 3), s.tower, 4);
  SplitMix g(73);
  for (unsigned l = 1; l <= 2; ++l) {
    for (unsigned k = 1; k <= 2; ++k) {
      for (int i = 0; i < 3; ++i) CHECK(lk_curvature(conn, l, k, random_vector(g, s.ctx(), 3, 3, 2)).is_zero());
    }
  }
  CHECK(stratification_probe(conn, 3).flat());
}

TEST_CASE("(l,k)-curvature of Omega on the sphere") {
  Setup s;
  const auto& mod = s.om.module();
  auto conn = InfinityConnection::from_projective_basis(mod, s.tower, 2);
  auto dx1 = mod.generator(0);
  auto k11 = lk_curvature(conn, 1, 1, dx1);
  CHECK_FALSE(k11.is_zero());
  CHECK(lk_curvature(conn, 1, 1, RingVector::zero(s.ctx(), 3)).is_zero());

  // Oracle: K_i = M(x) [ sum_j M_ij(x+t) m_j(x+t+u) - m_i(x+t+u) ], m = M e_1.
  auto t = s.tower->tensor(1, 1);
  const auto& tc = *t->ctx();
  const auto& m = s.om.M();
  std::vector<Polynomial> inner(3), oracle(3);
  for (std::size_t i = 0; i < 3; ++i) {
    Polynomial acc = -m(i, 0).substitute(shift(3, 3));
    for (std::size_t j = 0; j < 3; ++j) acc += m(i, j).substitute(shift(3, 2)) * m(j, 0).substitute(shift(3, 3));
    inner[i] = acc;
  }
  for (std::size_t i = 0; i < 3; ++i) {
    Polynomial acc;
    for (std::size_t j = 0; j < 3; ++j) acc += m(i, j) * inner[j];
    oracle[i] = tc.reduce(acc);
  }
  CHECK(k11.components == oracle);
  CHECK(k11.to_string() == "(t1*u1, t2*u1, t3*u1)");

  auto probe = stratification_probe(conn, 2);
  CHECK_FALSE(probe.flat());
  REQUIRE(probe.witness() != nullptr);
  CHECK(probe.witness()->l == 1);
  CHECK(probe.witness()->k == 1);
  CHECK(probe.witness()->generator == 0);

  CHECK_THROWS_AS(lk_curvature(conn, 2, 1, dx1), InputError);
  CHECK_THROWS_AS(lk_curvature(conn, 0, 1, dx1), InputError);
  CHECK_THROWS_AS(stratification_probe(conn, 1), InputError);
}

TEST_CASE("theta_0 must be the identity") {
  Setup s;
  const auto& mod = s.om.module();
  auto good = InfinityConnection::from_projective_basis(mod, s.tower, 2);
  std::vector<RingMatrix> theta{good.theta(0).scaled(2), good.theta(1), good.theta(2)};
  CHECK_THROWS_AS(InfinityConnection(mod, s.tower, theta), InputError);
  // The identity itself is a valid theta_0 for Omega since it is endo-equal to M.
  std::vector<RingMatrix> id{RingMatrix::identity(s.tower->ring(0)->ctx(), 3), good.theta(1), good.theta(2)};
  CHECK_NOTHROW(InfinityConnection(mod, s.tower, id));
  auto other = std::make_shared<const JetTower>(EllipsoidRing({2, 2, 2}));
  CHECK_THROWS_AS(InfinityConnection::from_projective_basis(mod, other, 2), InputError);
}

TEST_CASE("product of d(a_i) expands as a signed subset sum") {
  // Free two-block ring: d(a) = a(y) - a(x).
  SplitMix g(79);
  const std::size_t k = 3;
  std::vector<Polynomial> ys;
  for (std::size_t i = 0; i < k; ++i) ys.push_back(Polynomial::variable(k + i));
  for (unsigned l = 1; l <= 3; ++l) {
    for (int sample = 0; sample < 5; ++sample) {
      std::vector<Polynomial> a;
      for (unsigned i = 0; i < l; ++i) a.push_back(random_poly(g, k, 2));
      Polynomial lhs(1);
      for (const auto& ai : a) lhs *= ai.substitute(ys) - ai;
      Polynomial rhs;
      for (unsigned mask = 0; mask < (1u << l); ++mask) {
        Polynomial term(1);
        for (unsigned i = 0; i < l; ++i) term *= (mask >> i & 1u) ? -a[i] : a[i].substitute(ys);
        rhs += term;
      }
      CHECK(lhs == rhs);
    }
  }
}
