#pragma once

#include <span>
#include <vector>

#include "cmpz/exact.hpp"
#include "cmpz/moment_types.hpp"

namespace cmpz {

// Large-lambda approximations. All require nu > 0 and use a = lambda^{1/nu};
// each keeps the terms through a^{-3} relative to its leading behaviour
// (a^{-2} for raw moments).

/// E[X]; `terms` in [1, 4] truncates the bracket (2 gives a - (nu-1)/(2nu)).
double mean_asym(const CmpParams& params, int terms = 4);
double variance_asym(const CmpParams& params);
/// kappa_n for n >= 2; n == 2 is variance_asym.
double cumulant_asym(const CmpParams& params, int n);
double skewness_asym(const CmpParams& params);
double kurtosis_asym(const CmpParams& params);
/// E[X^n], n >= 1, through a^{-2} relative.
double raw_moment_asym(const CmpParams& params, int n);

/// Second correction coefficient of the raw-moment expansion,
///   -n(nu-1)(6n^2 - 3n nu - 15n + 4nu + 10) / (24 nu^2)
///     + (C(n,3) + 3 C(n,4)) / nu^2,
/// as obtained from the Bell-polynomial expansion of mu'_n.
double raw_moment_a2(int n, double nu);
/// The same coefficient with 6 n nu^2 in place of 6 n^2, as it appears in
/// the published expansion. Kept for comparison; not used by
/// raw_moment_asym.
double published_a2(int n, double nu);

/// kappa_1..kappa_{n_max} from the asymptotic formulas.
CumulantSet cumulants_asym(const CmpParams& params, int n_max);

/// gamma_1 = kappa_3 / kappa_2^{3/2} and gamma_2 = kappa_4 / kappa_2^2 from
/// exact cumulants.
double skewness_exact(const CmpParams& params, double rel_tol);
double kurtosis_exact(const CmpParams& params, double rel_tol);

/// Partial Bell polynomial B_{n,k}(x_1, ..., x_{n-k+1}) via
///   B_{n,k} = sum_i C(n-1, i-1) x_i B_{n-i,k-1}.
/// Requires 1 <= k <= n <= 10 and x.size() >= n - k + 1.
double bell_partial(int n, int k, std::span<const double> x);

/// mu'_n = sum_k B_{n,k}(kappa_1, ...); central moments with kappa_1 := 0.
MomentSet raw_moments_from_cumulants(const CumulantSet& cumulants);

/// E[f_alpha(X)] for X ~ Poisson(alpha), where
///   f_alpha(x) = (alpha^x e^{-alpha} sqrt(2 pi alpha) / Gamma(x+1))^{nu-1}.
double poisson_expectation(double nu, double alpha);

struct LimitReport {
  std::vector<double> alphas;
  std::vector<double> expectations;
  std::vector<double> deviations;  // |E - nu^{-1/2}|
  /// Log-log slope of deviation against alpha; NaN when degenerate.
  double slope = 0.0;
  /// nu == 1: f is identically 1 and every deviation is zero.
  bool degenerate = false;
};

/// Requires nu > 0 and at least two strictly increasing alphas, each >= 5.
LimitReport verify_poisson_expectation_limit(double nu,
                                             std::span<const double> alphas);

}  // namespace cmpz
