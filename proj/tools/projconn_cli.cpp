// projconn: command-line front end.
// Exit codes: 0 pass, 1 verification failure, 2 input error, 3 resource cap.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "projconn/error.hpp"
#include "projconn/ring.hpp"
#include "projconn/suites.hpp"

namespace {

using namespace projconn;

enum Exit { kPass = 0, kFail = 1, kInput = 2, kResource = 3 };

int cmd_report(const std::vector<unsigned>& exponents, bool json) {
  auto report = ring_report(exponents);
  if (json) {
    std::cout << report.dump(2) << '\n';
  } else {
    std::cout << ring_report_text(report);
  }
  return kPass;
}

int cmd_verify(const SuiteOptions& options, const std::string& suite, bool json) {
  std::vector<std::string> names = suite.empty() ? suite_names() : std::vector<std::string>{suite};
  bool ok = true;
  nlohmann::json all = nlohmann::json::array();
  for (const auto& name : names) {
    auto report = run_suite(name, options);
    ok = ok && report.passed();
    if (json) {
      all.push_back(report.to_json());
    } else {
      std::cout << report.to_text();
    }
  }
  if (json) {
    std::cout << nlohmann::json{{"passed", ok}, {"suites", all}}.dump(2) << '\n';
  } else {
    std::cout << (ok ? "ALL PASS" : "FAILURES") << '\n';
  }
  return ok ? kPass : kFail;
}

int cmd_jets(const std::vector<unsigned>& exponents, unsigned free_rank, unsigned l, unsigned k, unsigned cap,
             bool json) {
  auto report = jets_report(exponents, free_rank, l, k, cap);
  std::cout << (json ? report.dump(2) + "\n" : jets_report_text(report));
  // Non-flatness is a finding, not a failure.
  return kPass;
}

int cmd_mcm(unsigned m, unsigned n, unsigned k, unsigned l, bool json) {
  auto report = mcm_report(m, n, k, l);
  std::cout << (json ? report.dump(2) + "\n" : mcm_report_text(report));
  return report["passed"].get<bool>() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connections, curvature and jets on ellipsoid rings"};
  app.require_subcommand(1);

  std::vector<unsigned> exponents{2, 2, 2};
  bool json = false;

  auto* report = app.add_subcommand("report", "Print M, tangent generators, curvature and traces");
  report->add_option("--exponents", exponents, "p1,...,pk")->delimiter(',')->required();
  report->add_flag("--json", json, "JSON output");

  SuiteOptions vopt;
  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--exponents", vopt.exponents, "p1,...,pk")->delimiter(',')->required();
  verify->add_option("--seed", vopt.seed, "Random seed")->capture_default_str();
  verify->add_option("--samples", vopt.samples, "Samples per sampled identity")
      ->capture_default_str()
      ->check(CLI::Range(1u, 10000u));
  verify->add_option("--suite", suite, "Run a single suite")->check(CLI::IsMember(suite_names()));
  verify->add_flag("--json", json, "JSON output");
  verify->add_flag("--timing", vopt.timing, "Include wall time (output is then not reproducible)");
  verify->add_flag("--corrupt-fundamental-matrix", vopt.corrupt_fundamental_matrix,
                   "Test hook: perturb M so that verification fails");

  unsigned free_rank = 0, jl = 1, jk = 1, cap = kDefaultDegreeCap;
  auto* jets = app.add_subcommand("jets", "Probe the (l,k)-curvature of the projective-basis infinity connection");
  jets->add_option("--exponents", exponents, "p1,...,pk (base ring, default 2,2,2)")->delimiter(',');
  jets->add_option("--free", free_rank, "Use the free module of this rank instead of Omega")
      ->check(CLI::Range(1u, 8u));
  jets->add_option("--l", jl, "Left order")->required();
  jets->add_option("--k", jk, "Right order")->required();
  jets->add_option("--degree-cap", cap, "Groebner degree cap")->capture_default_str();
  jets->add_flag("--json", json, "JSON output");

  unsigned mm = 0, mn = 0, mk = 0, ml = 0;
  auto* mcm = app.add_subcommand("mcm", "Verify the matrix factorization of x^m + y^n + z^2");
  mcm->add_option("--m", mm)->required();
  mcm->add_option("--n", mn)->required();
  mcm->add_option("--k", mk)->required();
  mcm->add_option("--l", ml)->required();
  mcm->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*report) return cmd_report(exponents, json);
    if (*verify) return cmd_verify(vopt, suite, json);
    if (*jets) return cmd_jets(exponents, free_rank, jl, jk, cap, json);
    if (*mcm) return cmd_mcm(mm, mn, mk, ml, json);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const UnsupportedSizeError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kFail;
  }
  return kInput;
}
