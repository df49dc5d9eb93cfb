#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cmpz {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Suites:
///   coeffs         inverse-factorial residual slopes for J = 1..8
///   limit          Poisson-expectation limit rate for nu in {0.5, 2}
///   special-cases  Z(lambda, 0), Z(lambda, 1), Z(lambda, 2) closed forms
std::vector<CheckResult> run_verify_suite(std::string_view suite);

const std::vector<std::string>& verify_suite_names();

}  // namespace cmpz
