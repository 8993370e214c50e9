#include "doctest.h"
#include "support.hpp"

#include "projconn/connection.hpp"
#include "projconn/error.hpp"

using namespace projconn;
using namespace testing_support;

TEST_CASE("build_ring") {
  EllipsoidRing s({2, 2, 2});
  CHECK(s.k() == 3);
  CHECK(s.ctx()->reduce(s.ctx()->parse("x1^2")) == s.ctx()->parse("1 - x2^2 - x3^2"));
  CHECK(s.ctx()->reduce(s.H()).is_zero());
  CHECK_THROWS_AS(EllipsoidRing({2}), InputError);
  CHECK_THROWS_AS(EllipsoidRing({2, 0, 2}), InputError);
  CHECK_THROWS_AS(EllipsoidRing({2, 2, 2, 2, 2, 2}), InputError);
  EllipsoidRing e({2, 2, 4});
  CHECK(e.ctx()->format(e.ctx()->groebner()[0]) == "x3^4 + x1^2 + x2^2 - 1");
}

TEST_CASE("sphere fundamental matrix") {
  KaehlerModule om(EllipsoidRing({2, 2, 2}));
  const auto& ctx = om.ctx();
  auto expected = parse_matrix(ctx, {"1 - x1^2", "-x1*x2", "-x1*x3", "-x1*x2", "1 - x2^2", "-x2*x3", "-x1*x3", "-x2*x3",
                                  "1 - x3^2"},
                            3);
  CHECK(om.M() == expected);
  auto c = om.canonical_rep(RingVector::unit(ctx, 3, 0));
  CHECK(c == RingVector(ctx, {ctx->parse("1 - x1^2"), ctx->parse("-x1*x2"), ctx->parse("-x1*x3")}));
  CHECK(om.canonical_rep(om.G()).is_zero());
}

TEST_CASE("general fundamental matrix entry") {
  KaehlerModule om(EllipsoidRing({3, 2, 2}));
  // M[1][2] = -(p1/p2) x1^(p1-1) x2
  CHECK(om.M()(0, 1) == om.ctx()->parse("-3/2*x1^2*x2"));
}

TEST_CASE("tangent generators") {
  auto s = tangent_generators(EllipsoidRing({2, 2, 2}));
  REQUIRE(s.size() == 3);
  CHECK(s[0].to_string() == "x2*d1 - x1*d2");
  CHECK(s[1].to_string() == "x3*d1 - x1*d3");
  CHECK(s[2].to_string() == "x3*d2 - x2*d3");
  CHECK(s[0].name() == "d12");
  auto e = tangent_generators(EllipsoidRing({2, 2, 4}));
  CHECK(e[1].to_string() == "4*x3^3*d1 - 2*x1*d3");
  for (const auto& d : e) CHECK(d.apply(EllipsoidRing({2, 2, 4}).H()).is_zero());
}

TEST_CASE("lie brackets") {
  EllipsoidRing ring({2, 2, 2});
  auto s = tangent_generators(ring);
  CHECK(lie_bracket(s[0], s[0]).is_zero());
  auto b = lie_bracket(s[0], s[1]);
  CHECK(b.coeffs() == s[2].coeffs());
  for (std::size_t i = 0; i < 3; ++i) {
    auto xi = Polynomial::variable(i);
    CHECK(b.apply(xi) == ring.ctx()->reduce(s[0].apply_raw(s[1].apply_raw(xi)) - s[1].apply_raw(s[0].apply_raw(xi))));
  }
  auto jacobi = [&](const TangentField& a, const TangentField& c, const TangentField& d) {
    auto t1 = lie_bracket(a, lie_bracket(c, d));
    auto t2 = lie_bracket(c, lie_bracket(d, a));
    auto t3 = lie_bracket(d, lie_bracket(a, c));
    std::vector<Polynomial> sum;
    for (std::size_t i = 0; i < 3; ++i) sum.push_back(ring.ctx()->reduce(t1[i] + t2[i] + t3[i]));
    return TangentField(ring.ctx(), sum).is_zero();
  };
  CHECK(jacobi(s[0], s[1], s[2]));
}

TEST_CASE("property: projective basis identities on five rings") {
  for (auto exps : std::vector<std::vector<unsigned>>{{2, 2, 2}, {2, 2, 4}, {2, 3, 2}, {2, 2}, {1, 2, 2}}) {
    CAPTURE(exps.size());
    KaehlerModule om{EllipsoidRing(exps)};
    const auto& m = om.M();
    const auto k = static_cast<long>(exps.size());
    CHECK(m * m == m);
    CHECK((m * om.G()).is_zero());
    CHECK(matrix_trace(m) == Polynomial(k - 1));
    CHECK(module_trace(om.module(), RingMatrix::identity(om.ctx(), exps.size())) == Polynomial(k - 1));
    CHECK(projectivity_report(om.module()).passed());
    for (const auto& d : tangent_generators(om.ring())) CHECK(d.apply(om.ring().H()).is_zero());
  }
}

TEST_CASE("property: canonical_rep is idempotent") {
  SplitMix g(23);
  KaehlerModule om(EllipsoidRing({2, 3, 2}));
  for (int i = 0; i < 20; ++i) {
    auto v = random_vector(g, om.ctx(), 3, 3, 3);
    CHECK(om.canonical_rep(om.canonical_rep(v)) == om.canonical_rep(v));
  }
}

TEST_CASE("corrupted fundamental matrix fails the projectivity report") {
  KaehlerModule om(EllipsoidRing({2, 2, 2}));
  const auto& m = om.M();
  ProjectiveModule bad("bad", m.with_entry(0, 1, m(0, 1) + Polynomial(1)), om.module().relations());
  auto r = projectivity_report(bad);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.checks.front().passed);
}
