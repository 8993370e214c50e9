#pragma once

#include <string>
#include <vector>

#include "projconn/matrix.hpp"

namespace projconn {

/// The 4x4 matrix factorization (phi, psi) of f = x^m + y^n + z^2 over Q[x,y,z].
struct FactorizationPair {
  unsigned m = 0, n = 0, k = 0, l = 0;
  RingPtr ctx;
  Polynomial f;
  RingMatrix phi;
  RingMatrix psi;
};

/// Builds the pair and verifies it. Throws InputError unless m, n >= 2,
/// k < m and l < n.
FactorizationPair build_factorization(unsigned m, unsigned n, unsigned k, unsigned l);

struct FactorizationReport {
  struct Check {
    std::string name;
    bool passed;
    std::string detail;
  };
  std::vector<Check> checks;
  bool passed() const;
};

/// Checks phi psi = f I, psi phi = f I and phi psi phi = f phi; a failure
/// names the first offending entry.
FactorizationReport verify_factorization(const FactorizationPair& pair);

}  // namespace projconn
