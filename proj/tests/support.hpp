#pragma once

// Test-only helpers: a SplitMix64 stream and small random ring elements.
// Kept separate from the library sampler so properties are not checked
// against the generator they exercise.

#include <cstdint>
#include <string>
#include <vector>

#include "projconn/matrix.hpp"

namespace testing_support {

using projconn::Monomial;
using projconn::Polynomial;

class SplitMix {
 public:
  explicit SplitMix(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

 private:
  std::uint64_t state_;
};

/// Unreduced polynomial in variables [0, nvars) of degree <= deg.
inline Polynomial random_poly(SplitMix& g, std::size_t nvars, unsigned deg, unsigned terms = 3) {
  Polynomial p;
  for (unsigned n = 0; n < terms; ++n) {
    Monomial m;
    const auto d = static_cast<unsigned>(g.range(0, deg));
    for (unsigned i = 0; i < d; ++i) {
      const auto v = static_cast<std::size_t>(g.range(0, static_cast<long>(nvars) - 1));
      m.set(v, m[v] + 1);
    }
    long c = g.range(-4, 4);
    if (c == 0) c = 1;
    p += Polynomial::monomial(m, c);
  }
  return p;
}

inline projconn::RingVector random_vector(SplitMix& g, const projconn::RingPtr& ctx, std::size_t n,
                                          std::size_t nvars, unsigned deg) {
  std::vector<Polynomial> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(random_poly(g, nvars, deg));
  return projconn::RingVector(ctx, std::move(e));
}

inline projconn::RingMatrix random_matrix(SplitMix& g, const projconn::RingPtr& ctx, std::size_t n,
                                          std::size_t nvars, unsigned deg) {
  std::vector<Polynomial> e;
  for (std::size_t i = 0; i < n * n; ++i) e.push_back(random_poly(g, nvars, deg, 2));
  return projconn::RingMatrix(ctx, n, n, std::move(e));
}

inline projconn::RingMatrix parse_matrix(const projconn::RingPtr& ctx, const std::vector<std::string>& entries,
                                         std::size_t n) {
  std::vector<Polynomial> e;
  for (const auto& s : entries) e.push_back(ctx->parse(s));
  return projconn::RingMatrix(ctx, n, n, std::move(e));
}

}  // namespace testing_support
