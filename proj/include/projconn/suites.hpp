#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "projconn/ring.hpp"

namespace projconn {

struct SuiteCheck {
  std::string name;
  bool passed;
  std::string witness;
};

struct VerificationReport {
  std::string suite;
  std::string ring;
  std::uint64_t seed = 0;
  unsigned samples = 0;
  std::vector<SuiteCheck> checks;
  /// Wall time in seconds; only filled on request so reports stay reproducible.
  std::optional<double> seconds;

  bool passed() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

struct SuiteOptions {
  std::vector<unsigned> exponents{2, 2, 2};
  std::uint64_t seed = 0;
  unsigned samples = 20;
  bool timing = false;
  /// Test hook: perturbs entry (1,1) of the fundamental matrix so that the
  /// projectivity checks must fail.
  bool corrupt_fundamental_matrix = false;
};

/// exactpoly, linalg, ellipsoid, connection, curvature, endomorphisms, weyl, jets, mcm.
const std::vector<std::string>& suite_names();

/// Throws InputError for an unknown suite or invalid exponents.
VerificationReport run_suite(const std::string& name, const SuiteOptions& options);

/// Everything `report` prints: M, tangent generators, curvature matrices for
/// all generator pairs, traces and (k = 3) charpoly3 invariants.
nlohmann::json ring_report(const std::vector<unsigned>& exponents);
std::string ring_report_text(const nlohmann::json& report);

/// K^(a,b) on every generator for a <= l, b <= k. free_rank = 0 probes Omega,
/// otherwise the free module of that rank over the same ring.
nlohmann::json jets_report(const std::vector<unsigned>& exponents, unsigned free_rank, unsigned l, unsigned k,
                           unsigned degree_cap = kDefaultDegreeCap);
std::string jets_report_text(const nlohmann::json& report);

nlohmann::json mcm_report(unsigned m, unsigned n, unsigned k, unsigned l);
std::string mcm_report_text(const nlohmann::json& report);

}  // namespace projconn
