#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cycdes {

struct CheckResult {
  std::string name;
  std::string scope;  // e.g. "n=5, lambda=(3,1)"
  bool pass = true;
  std::string counterexample;  // empty when pass
};

struct VerifyReport {
  std::string suite;
  std::string statement;  // the claim being checked, in words
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

// Named verification sweeps over all sizes up to nmax. All are exhaustive
// and deterministic except the descent-resampling check inside
// main_theorem, which draws from the given seed.
VerifyReport verify_main_theorem(int nmax, std::uint64_t seed = 1);
VerifyReport verify_er_theorem(int nmax);
VerifyReport verify_jdt_bijection(int nmax);
VerifyReport verify_des_preservation(int nmax);
VerifyReport verify_extension_axioms(int nmax);
VerifyReport verify_remarks();

// Dispatch by suite name: main-theorem, er-theorem, jdt-bijection,
// des-preservation, extension-axioms, remarks. Unknown names throw
// std::invalid_argument.
VerifyReport run_suite(const std::string& name, int nmax,
                       std::uint64_t seed = 1);

std::vector<std::string> suite_names();

}  // namespace cycdes
