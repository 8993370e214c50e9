#pragma once

#include <cstdint>
#include <random>

#include "projconn/matrix.hpp"

namespace projconn {

/// Seeded generator of small random ring elements for sampled identities.
/// Draws use raw mt19937_64 output, so streams are identical across
/// standard libraries for a fixed seed.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Integer in [lo, hi].
  long uniform(long lo, long hi);
  /// Nonzero integer in [-bound, bound].
  long nonzero(long bound);

  /// Reduced random polynomial in variables [0, nvars) with total degree
  /// <= max_degree and at most max_terms terms.
  Polynomial poly(const RingContext& ctx, std::size_t nvars, unsigned max_degree = 2,
                  unsigned max_terms = 3);
  RingVector vector(const RingPtr& ctx, std::size_t n, unsigned max_degree = 2);
  RingMatrix matrix(const RingPtr& ctx, std::size_t n, unsigned max_degree = 1);

 private:
  std::mt19937_64 rng_;
};

}  // namespace projconn
