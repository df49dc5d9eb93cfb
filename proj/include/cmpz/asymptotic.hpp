#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cmpz/exact.hpp"
#include "cmpz/numerics.hpp"

namespace cmpz {

inline constexpr int kCoefficientCount = 8;

/// c_j(nu) for the large-lambda expansion of Z, stored as
///   c_j = (nu^2 - 1) * P_j(nu^2) / denominator   (j >= 1),  c_0 = 1,
/// with P_j's integer coefficients listed from the highest power down.
struct CoeffPolynomial {
  int index = 0;
  std::vector<std::int64_t> numerator;
  std::int64_t denominator = 1;

  double evaluate(double nu) const;
  long double evaluate(long double nu) const;
};

const std::array<CoeffPolynomial, kCoefficientCount>& coefficient_table();

/// c_j(nu), j in [0, 7], nu > 0.
double coeff(int j, double nu);

/// The truncated expansion
///   Z ~ exp(nu a) / (a^{(nu-1)/2} (2 pi)^{(nu-1)/2} sqrt(nu)) sum_k c_k (nu a)^{-k},
/// a = lambda^{1/nu}, with diagnostics.
struct AsymEval {
  /// |prefactor * series_sum|; see `negative`.
  LogValue value;
  /// terms[k] = c_k (nu a)^{-k}; terms[0] == 1.
  std::vector<double> terms;
  int order_used = 0;
  double prefactor_log = 0.0;
  double series_sum = 1.0;
  /// The truncated series summed to a negative number (far outside the
  /// asymptotic regime).
  bool negative = false;
};

/// order = number of series terms retained, 1..8. Requires nu > 0.
AsymEval z_asymptotic(const CmpParams& params, int order);

/// 100 (Z_asym - Z_exact) / Z_exact, from the log difference.
double percent_error(const CmpParams& params, int order, double rel_tol);
double percent_error(const AsymEval& approx, const LogValue& exact);

/// |rhs / lhs - 1| for the inverse factorial identity
///   Gamma(t+1)^{-nu} = nu^{nu(t+1/2)} / (2 pi)^{(nu-1)/2}
///                      * sum_{j<J} c_j / Gamma(nu t + (1+nu)/2 + j),
/// evaluated in binary128. J in [1, 8].
double verify_inverse_factorial(double nu, double t, int terms);

}  // namespace cmpz
