#include "projconn/sampling.hpp"

#include "projconn/error.hpp"

namespace projconn {

long Sampler::uniform(long lo, long hi) {
  if (hi < lo) throw InputError("Sampler::uniform: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng_() % span);
}

long Sampler::nonzero(long bound) {
  long v = uniform(1, bound);
  return uniform(0, 1) == 0 ? v : -v;
}

Polynomial Sampler::poly(const RingContext& ctx, std::size_t nvars, unsigned max_degree,
                         unsigned max_terms) {
  const auto terms = static_cast<unsigned>(uniform(1, max_terms));
  Polynomial p;
  for (unsigned n = 0; n < terms; ++n) {
    Monomial m;
    const auto degree = static_cast<unsigned>(uniform(0, max_degree));
    for (unsigned d = 0; d < degree; ++d) {
      const auto v = static_cast<std::size_t>(uniform(0, static_cast<long>(nvars) - 1));
      m.set(v, m[v] + 1);
    }
    p += Polynomial::monomial(m, nonzero(3));
  }
  return ctx.reduce(p);
}

RingVector Sampler::vector(const RingPtr& ctx, std::size_t n, unsigned max_degree) {
  std::vector<Polynomial> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(poly(*ctx, ctx->nvars(), max_degree));
  return RingVector(ctx, std::move(e));
}

RingMatrix Sampler::matrix(const RingPtr& ctx, std::size_t n, unsigned max_degree) {
  std::vector<Polynomial> e;
  for (std::size_t i = 0; i < n * n; ++i) e.push_back(poly(*ctx, ctx->nvars(), max_degree));
  return RingMatrix(ctx, n, n, std::move(e));
}

}  // namespace projconn
