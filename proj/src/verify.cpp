#include "cmpz/verify.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

#include "cmpz/asymptotic.hpp"
#include "cmpz/error.hpp"
#include "cmpz/exact.hpp"
#include "cmpz/moments.hpp"
#include "cmpz/numerics.hpp"

namespace cmpz {

namespace {

std::string fmt(const char* pattern, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

std::vector<CheckResult> coeffs_suite() {
  constexpr double kNu = 2.5;
  const std::vector<double> ts = {100.0, 200.0, 400.0};
  std::vector<double> log_t;
  for (double t : ts) log_t.push_back(std::log(t));

  std::vector<CheckResult> out;
  for (int j = 1; j <= kCoefficientCount; ++j) {
    std::vector<double> log_r;
    for (double t : ts) log_r.push_back(std::log(verify_inverse_factorial(kNu, t, j)));
    const double slope = regression_slope(log_t, log_r);
    const double limit = -j + 0.25;
    out.push_back({"coeffs.residual_slope.J=" + std::to_string(j), slope <= limit,
                   fmt("slope=%.4f limit=%.2f", slope, limit)});
  }
  const double r = verify_inverse_factorial(1.0, 10.0, kCoefficientCount);
  out.push_back({"coeffs.nu=1.exact", r <= 1e-12, fmt("residual=%.3g limit=%.0e", r, 1e-12)});
  return out;
}

std::vector<CheckResult> limit_suite() {
  const std::vector<double> alphas = {10, 20, 40, 80};
  std::vector<CheckResult> out;
  for (double nu : {0.5, 2.0}) {
    const LimitReport rep = verify_poisson_expectation_limit(nu, alphas);
    char name[64];
    std::snprintf(name, sizeof name, "limit.slope.nu=%g", nu);
    out.push_back({name, rep.slope <= -0.75,
                   fmt("slope=%.4f limit=%.2f", rep.slope, -0.75)});
  }
  const LimitReport one = verify_poisson_expectation_limit(1.0, alphas);
  double worst = 0.0;
  for (double d : one.deviations) worst = std::max(worst, d);
  out.push_back({"limit.nu=1.degenerate", one.degenerate && worst == 0.0,
                 fmt("max_deviation=%g degenerate=%g", worst, one.degenerate ? 1 : 0)});
  return out;
}

// 20 log-spaced points in [0.1, 50]
std::vector<double> lambda_grid() {
  std::vector<double> g;
  for (int i = 0; i < 20; ++i) {
    g.push_back(std::exp(std::log(0.1) + i * (std::log(50.0) - std::log(0.1)) / 19.0));
  }
  return g;
}

template <typename Reference>
CheckResult identity_check(const std::string& name, double nu, bool below_one,
                           Reference log_reference) {
  constexpr double kTol = 1e-12;
  double worst = 0.0;
  int points = 0;
  for (double lambda : lambda_grid()) {
    if (below_one && lambda >= 1.0) continue;
    const ExactZ z = z_exact(CmpParams(lambda, nu), 1e-15);
    const double err = std::abs(
        std::expm1(log_ratio(z.value, LogValue::from_log(log_reference(lambda)))));
    worst = std::max(worst, err);
    ++points;
  }
  return {name, worst <= kTol,
          fmt("max_rel_err=%.3g over %g points", worst, points)};
}

std::vector<CheckResult> special_cases_suite() {
  return {
      identity_check("special.nu=0.geometric", 0.0, true,
                     [](double l) { return -std::log1p(-l); }),
      identity_check("special.nu=1.exponential", 1.0, false,
                     [](double l) { return l; }),
      identity_check("special.nu=2.bessel_i0", 2.0, false,
                     [](double l) {
                       return std::log(std::cyl_bessel_i(0.0, 2.0 * std::sqrt(l)));
                     }),
  };
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {"coeffs", "limit", "special-cases"};
  return names;
}

std::vector<CheckResult> run_verify_suite(std::string_view suite) {
  if (suite == "coeffs") return coeffs_suite();
  if (suite == "limit") return limit_suite();
  if (suite == "special-cases") return special_cases_suite();
  fail(ErrorCode::invalid_argument,
       "unknown verify suite '" + std::string(suite) +
           "' (expected coeffs, limit or special-cases)");
}

}  // namespace cmpz
