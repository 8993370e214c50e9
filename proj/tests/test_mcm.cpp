#include "doctest.h"

#include "projconn/error.hpp"
#include "projconn/mcm.hpp"

using namespace projconn;

TEST_CASE("factorization examples") {
  auto p = build_factorization(2, 2, 1, 1);
  CHECK(p.ctx->format(p.f) == "x^2 + y^2 + z^2");
  CHECK(p.phi * p.psi == RingMatrix::identity(p.ctx, 4).scaled(p.f));
  auto q = build_factorization(3, 2, 1, 1);
  CHECK(q.psi * q.phi == RingMatrix::identity(q.ctx, 4).scaled(q.ctx->parse("x^3 + y^2 + z^2")));
  CHECK(p.phi(0, 3) == p.ctx->parse("z"));
  CHECK(p.psi(3, 3) == p.ctx->parse("-y"));
}

TEST_CASE("range checks") {
  CHECK_THROWS_AS(build_factorization(2, 2, 2, 1), InputError);
  CHECK_THROWS_AS(build_factorization(2, 2, 1, 2), InputError);
  CHECK_THROWS_AS(build_factorization(1, 2, 0, 0), InputError);
  CHECK_NOTHROW(build_factorization(2, 3, 0, 2));
}

TEST_CASE("all small parameters factor") {
  for (unsigned m = 2; m <= 4; ++m) {
    for (unsigned n = 2; n <= 4; ++n) {
      for (unsigned k = 0; k < m; ++k) {
        for (unsigned l = 0; l < n; ++l) {
          auto r = verify_factorization(build_factorization(m, n, k, l));
          CHECK(r.passed());
          CHECK(r.checks.size() == 3);
        }
      }
    }
  }
}

TEST_CASE("perturbed phi fails with the offending entry") {
  auto p = build_factorization(2, 2, 1, 1);
  p.phi = p.phi.with_entry(1, 2, p.ctx->parse("2*z"));
  auto r = verify_factorization(p);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.checks[0].passed);
  CHECK(r.checks[0].detail.find("entry (") == 0);
}
