#include "doctest.h"
#include "support.hpp"

#include "projconn/ellipsoid.hpp"
#include "projconn/error.hpp"

using namespace projconn;
using namespace testing_support;

namespace {

RingPtr sphere() { return EllipsoidRing({2, 2, 2}).ctx(); }

Polynomial P(const RingContext& ctx, const char* s) { return ctx.parse(s); }

}  // namespace

TEST_CASE("monomial arithmetic") {
  Monomial a{2, 1, 0};
  Monomial b{1, 0, 3};
  CHECK((a * b) == Monomial{3, 1, 3});
  CHECK((a * b).degree() == 7);
  CHECK(lcm(a, b) == Monomial{2, 1, 3});
  CHECK(Monomial{1, 0, 0}.divides(a));
  CHECK_FALSE(b.divides(a));
  CHECK((a / Monomial{1, 1, 0}) == Monomial{1, 0, 0});
  CHECK(Monomial{1, 0}.coprime(Monomial{0, 2}));
  CHECK(grlex_compare(Monomial{0, 0, 2}, Monomial{1, 0, 0}) > 0);
  CHECK(grlex_compare(Monomial{1, 1}, Monomial{0, 2}) > 0);
  CHECK_THROWS_AS(Monomial::variable(0, 70000), ResourceError);
}

TEST_CASE("parse and format round trip") {
  auto names = standard_names(3);
  auto p = parse_polynomial("-3/2*x1^2*x2 + 1 - x3", names);
  CHECK(format_polynomial(p, names) == "-3/2*x1^2*x2 - x3 + 1");
  CHECK(format_polynomial(Polynomial(), names) == "0");
  CHECK(parse_polynomial(format_polynomial(p, names), names) == p);
  CHECK(format_polynomial(parse_polynomial("x1 - x1", names), names) == "0");
  CHECK_THROWS_AS(parse_polynomial("x4", names), InputError);
  CHECK_THROWS_AS(parse_polynomial("x1 +", names), InputError);
  CHECK_THROWS_AS(parse_polynomial("", names), InputError);
}

TEST_CASE("polynomial arithmetic and calculus") {
  auto names = standard_names(2);
  auto f = parse_polynomial("x1^2 + x1*x2", names);
  auto g = parse_polynomial("x1 - x2", names);
  CHECK(format_polynomial(f * g, names) == "x1^3 - x1*x2^2");
  CHECK(format_polynomial(f.derivative(0), names) == "2*x1 + x2");
  CHECK((f - f).is_zero());
  CHECK(g.pow(0) == Polynomial(1));
  std::vector<Polynomial> images{Polynomial::variable(1), Polynomial::variable(0)};
  CHECK(format_polynomial(f.substitute(images), names) == "x1*x2 + x2^2");
}

TEST_CASE("reduce on the sphere") {
  auto ctx = sphere();
  CHECK(ctx->reduce(P(*ctx, "x1^2 + x2^2 + x3^2")) == Polynomial(1));
  CHECK(ctx->reduce(Polynomial()).is_zero());
  auto r = ctx->reduce(P(*ctx, "x1^3"));
  CHECK(r == P(*ctx, "x1 - x1*x2^2 - x1*x3^2"));
  // Quotient times H plus remainder reproduces x1^3.
  auto d = ctx->divide(P(*ctx, "x1^3"));
  REQUIRE(d.quotients.size() == 1);
  CHECK(d.quotients[0] * ctx->groebner()[0] + d.remainder == P(*ctx, "x1^3"));
  CHECK_THROWS_AS(ctx->reduce(Polynomial::variable(5)), InputError);
}

TEST_CASE("groebner basis examples") {
  auto names = standard_names(3);
  auto h = parse_polynomial("2*x1^2 + 2*x2^2 + 2*x3^2 - 2", names);
  auto gb = groebner_basis({h});
  REQUIRE(gb.size() == 1);
  CHECK(format_polynomial(gb[0], names) == "x1^2 + x2^2 + x3^2 - 1");

  auto two = groebner_basis({parse_polynomial("x1 - 1", names), parse_polynomial("x2 - 1", names)});
  REQUIRE(two.size() == 2);
  CHECK(format_polynomial(two[0], names) == "x2 - 1");
  CHECK(format_polynomial(two[1], names) == "x1 - 1");

  // Sphere jet ideal for l = 1.
  EllipsoidRing s({2, 2, 2});
  auto jn = standard_names(3, 2);
  std::vector<Polynomial> shift;
  for (std::size_t i = 0; i < 3; ++i) shift.push_back(Polynomial::variable(i) + Polynomial::variable(3 + i));
  auto ht = s.H().substitute(shift).truncate(3, 6, 1);
  std::vector<Monomial> trunc;
  for (std::size_t i = 3; i < 6; ++i) {
    for (std::size_t j = i; j < 6; ++j) trunc.push_back(Monomial::variable(i) * Monomial::variable(j));
  }
  RingContext p1(jn, {s.H(), ht}, {}, trunc);
  CHECK(p1.reduce(parse_polynomial("t1*t2", jn)).is_zero());
  CHECK(p1.reduce(parse_polynomial("x1*t1 + x2*t2 + x3*t3", jn)).is_zero());
  CHECK_FALSE(p1.reduce(parse_polynomial("t1", jn)).is_zero());
}

TEST_CASE("groebner degree cap") {
  auto names = standard_names(3);
  auto a = parse_polynomial("x1^2*x2 - x3", names);
  auto b = parse_polynomial("x1*x2^2 - x1", names);
  CHECK_THROWS_AS(groebner_basis({a, b}, {}, 3u), ResourceError);
  CHECK_NOTHROW(groebner_basis({a, b}));
}

TEST_CASE("lex order elimination") {
  auto names = standard_names(2);
  MonomialOrder lex{MonomialOrder::Kind::Lex, {}};
  auto gb = groebner_basis({parse_polynomial("x1 - x2^2", names), parse_polynomial("x1^2 - x2", names)}, lex);
  // The last element under lex involves only x2.
  bool eliminated = false;
  for (const auto& g : gb) eliminated = eliminated || g.last_variable() == 1 && g.coefficient(Monomial{1, 0}) == 0 &&
                                                          g.terms().front().monomial[0] == 0;
  CHECK(eliminated);
}

TEST_CASE("taylor shift") {
  auto names = standard_names(3, 2);
  RingContext ctx(names, {});
  CHECK(format_polynomial(taylor_shift(Polynomial::variable(0), 1, ctx, 3), names) == "x1 + t1");
  CHECK(taylor_shift(Polynomial(7), 3, ctx, 3) == Polynomial(7));
  CHECK(format_polynomial(taylor_shift(parse_polynomial("x1^2", names), 1, ctx, 3), names) == "x1^2 + 2*x1*t1");
  CHECK_THROWS_AS(taylor_shift(Polynomial::variable(4), 1, ctx, 3), InputError);
}

TEST_CASE("property: reduce is an idempotent ring map with exact division") {
  SplitMix g(11);
  for (auto exps : std::vector<std::vector<unsigned>>{{2, 2, 2}, {2, 3, 2}, {2, 2, 4}, {1, 2, 2}}) {
    EllipsoidRing ring(exps);
    const auto& ctx = *ring.ctx();
    for (int i = 0; i < 25; ++i) {
      auto f = random_poly(g, 3, 5, 4);
      auto h = random_poly(g, 3, 4, 3);
      auto rf = ctx.reduce(f);
      CHECK(ctx.reduce(rf) == rf);
      CHECK(ctx.reduce(f + h) == ctx.reduce(rf + ctx.reduce(h)));
      CHECK(ctx.reduce(f * h) == ctx.reduce(rf * ctx.reduce(h)));
      auto d = ctx.divide(f);
      Polynomial back = d.remainder;
      for (std::size_t q = 0; q < d.quotients.size(); ++q) back += d.quotients[q] * ctx.groebner()[q];
      CHECK(back == f);
    }
  }
}

TEST_CASE("property: groebner output is confluent and deterministic") {
  SplitMix g(5);
  auto names = standard_names(3);
  for (int i = 0; i < 10; ++i) {
    std::vector<Polynomial> gens{random_poly(g, 3, 2, 3), random_poly(g, 3, 2, 3)};
    auto gb = groebner_basis(gens);
    CHECK(gb == groebner_basis(gens));
    for (std::size_t a = 0; a < gb.size(); ++a) {
      for (std::size_t b = a + 1; b < gb.size(); ++b) {
        CHECK(normal_form(s_polynomial(gb[a], gb[b], {}), gb, {}).is_zero());
      }
    }
    for (const auto& p : gens) CHECK(normal_form(p, gb, {}).is_zero());
  }
}

TEST_CASE("property: taylor shift is multiplicative up to truncation") {
  SplitMix g(3);
  RingContext ctx(standard_names(3, 2), {});
  for (unsigned l = 0; l <= 3; ++l) {
    for (int i = 0; i < 10; ++i) {
      auto a = random_poly(g, 3, 3);
      auto b = random_poly(g, 3, 3);
      CHECK(taylor_shift(a * b, l, ctx, 3) ==
            (taylor_shift(a, l, ctx, 3) * taylor_shift(b, l, ctx, 3)).truncate(3, 6, l));
    }
  }
}
