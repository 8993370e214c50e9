#include "doctest.h"
#include "support.hpp"

#include "projconn/ellipsoid.hpp"
#include "projconn/error.hpp"

using namespace projconn;
using namespace testing_support;

namespace {

const std::vector<std::string> kReferenceCurvature{"0", "x1*x3", "-x1*x2", "-x1*x3", "0", "x1^2", "x1*x2", "-x1^2", "0"};

/// det(lambda I - A) by the rule of Sarrus in a ring with lambda appended.
Polynomial sarrus_charpoly(const RingMatrix& a, const RingContext& lctx, std::size_t lambda_index) {
  const Polynomial l = Polynomial::variable(lambda_index);
  auto e = [&](std::size_t i, std::size_t j) { return (i == j ? l : Polynomial()) - a(i, j); };
  Polynomial d = e(0, 0) * e(1, 1) * e(2, 2) + e(0, 1) * e(1, 2) * e(2, 0) + e(0, 2) * e(1, 0) * e(2, 1) -
                 e(0, 2) * e(1, 1) * e(2, 0) - e(0, 0) * e(1, 2) * e(2, 1) - e(0, 1) * e(1, 0) * e(2, 2);
  return lctx.reduce(d);
}

}  // namespace

TEST_CASE("matrix basics") {
  auto ctx = EllipsoidRing({2, 2, 2}).ctx();
  auto id = RingMatrix::identity(ctx, 3);
  auto a = parse_matrix(ctx, {"x1", "x2", "0", "1", "x3", "x1*x2", "0", "0", "2"}, 3);
  CHECK(id * a == a);
  CHECK(a * id == a);
  CHECK(commutator(a, a).is_zero());
  CHECK(a.transpose().transpose() == a);
  CHECK(a.row(1) == RingVector(ctx, {1, Polynomial::variable(2), Polynomial::variable(0) * Polynomial::variable(1)}));
  CHECK_THROWS_AS(a * RingMatrix::identity(ctx, 2), InputError);
  auto other = EllipsoidRing({2, 2, 2}).ctx();
  CHECK_THROWS_AS(a + RingMatrix::identity(other, 3), InputError);
}

TEST_CASE("det and charpoly3") {
  auto ctx = EllipsoidRing({2, 2, 2}).ctx();
  CHECK(det(RingMatrix::identity(ctx, 4)) == Polynomial(1));
  auto x = [&](std::size_t i) { return Polynomial::variable(i); };
  CHECK(det(RingMatrix::diagonal(ctx, {x(0), x(1), x(2)})) == ctx->reduce(x(0) * x(1) * x(2)));
  CHECK_THROWS_AS(det(RingMatrix::identity(ctx, 5)), UnsupportedSizeError);

  auto cid = charpoly3(RingMatrix::identity(ctx, 3));
  CHECK(cid.trace == Polynomial(3));
  CHECK(cid.p_a == Polynomial(3));
  CHECK(cid.det == Polynomial(1));
  auto cz = charpoly3(RingMatrix::zero(ctx, 3, 3));
  CHECK((cz.trace.is_zero() && cz.p_a.is_zero() && cz.det.is_zero()));

  auto r = parse_matrix(ctx, kReferenceCurvature, 3);
  auto c = charpoly3(r);
  CHECK(ctx->equal(c.p_a, ctx->parse("-x1^2")));
  CHECK(ctx->equal(c.minor_sum, ctx->parse("x1^2")));
  CHECK(c.det.is_zero());
  CHECK(det(r).is_zero());
  CHECK(matrix_trace(r).is_zero());
}

TEST_CASE("json round trip") {
  auto ctx = EllipsoidRing({2, 2}).ctx();
  auto a = parse_matrix(ctx, {"x1", "-1/2*x2", "0", "x1*x2"}, 2);
  auto j = to_json(a);
  CHECK(j["rows"] == 2);
  CHECK(matrix_from_json(j, ctx) == a);
}

TEST_CASE("property: trace of commutators, det multiplicativity, charpoly against Sarrus") {
  SplitMix g(17);
  EllipsoidRing ring({2, 3, 2});
  const auto& ctx = ring.ctx();
  auto names = ctx->names();
  names.push_back("lambda");
  RingContext lctx(names, {ring.H()});
  for (int i = 0; i < 20; ++i) {
    auto a = random_matrix(g, ctx, 3, 3, 1);
    auto b = random_matrix(g, ctx, 3, 3, 1);
    CHECK(matrix_trace(commutator(a, b)).is_zero());
    CHECK(ctx->equal(det(a * b), det(a) * det(b)));
    auto c = charpoly3(a);
    const Polynomial l = Polynomial::variable(3);
    CHECK(lctx.equal(sarrus_charpoly(a, lctx, 3), l.pow(3) - c.trace * l.pow(2) + c.minor_sum * l - c.det));
  }
  for (int i = 0; i < 5; ++i) {
    auto a = random_matrix(g, ctx, 4, 3, 1);
    auto b = random_matrix(g, ctx, 4, 3, 1);
    CHECK(matrix_trace(commutator(a, b)).is_zero());
    CHECK(ctx->equal(det(a * b), det(a) * det(b)));
  }
}
