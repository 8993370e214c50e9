#include "projconn/mcm.hpp"

#include <algorithm>
#include <stdexcept>

#include "projconn/error.hpp"

namespace projconn {

namespace {

Polynomial pw(std::size_t var, unsigned e) { return Polynomial::monomial(Monomial::variable(var, e)); }

std::string first_mismatch(const RingMatrix& got, const RingMatrix& want) {
  for (std::size_t i = 0; i < got.rows(); ++i) {
    for (std::size_t j = 0; j < got.cols(); ++j) {
      if (!(got(i, j) == want(i, j))) {
        const auto& ctx = *got.ctx();
        return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") is " +
               ctx.format(got(i, j)) + ", expected " + ctx.format(want(i, j));
      }
    }
  }
  return {};
}

}  // namespace

FactorizationPair build_factorization(unsigned m, unsigned n, unsigned k, unsigned l) {
  if (m < 2 || n < 2) throw InputError("mcm: m and n must be >= 2");
  if (k > m - 1) throw InputError("mcm: k must lie in [0, m-1]");
  if (l > n - 1) throw InputError("mcm: l must lie in [0, n-1]");
  auto ctx = std::make_shared<const RingContext>(std::vector<std::string>{"x", "y", "z"},
                                                 std::vector<Polynomial>{});
  const Polynomial x_k = pw(0, k), x_mk = pw(0, m - k);
  const Polynomial y_l = pw(1, l), y_nl = pw(1, n - l);
  const Polynomial z = pw(2, 1), o;
  auto phi = RingMatrix(ctx, 4, 4,
                        {x_mk, y_nl, o, z,
                         y_l, -x_k, z, o,
                         z, o, -y_nl, -x_k,
                         o, z, x_mk, -y_l});
  auto psi = RingMatrix(ctx, 4, 4,
                        {x_k, y_nl, z, o,
                         y_l, -x_mk, o, z,
                         o, z, -y_l, x_k,
                         z, o, -x_mk, -y_nl});
  FactorizationPair pair{m, n, k, l, ctx, pw(0, m) + pw(1, n) + pw(2, 2), phi, psi};
  auto report = verify_factorization(pair);
  for (const auto& c : report.checks) {
    if (!c.passed) throw std::logic_error("mcm: " + c.name + " fails, " + c.detail);
  }
  return pair;
}

bool FactorizationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

FactorizationReport verify_factorization(const FactorizationPair& pair) {
  const auto fi = RingMatrix::identity(pair.ctx, 4).scaled(pair.f);
  FactorizationReport report;
  auto add = [&](std::string name, const RingMatrix& got, const RingMatrix& want) {
    auto detail = first_mismatch(got, want);
    report.checks.push_back({std::move(name), detail.empty(), detail});
  };
  add("phi*psi = f*I", pair.phi * pair.psi, fi);
  add("psi*phi = f*I", pair.psi * pair.phi, fi);
  add("phi*psi*phi = f*phi", pair.phi * pair.psi * pair.phi, pair.phi.scaled(pair.f));
  return report;
}

}  // namespace projconn
