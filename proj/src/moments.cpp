#include "cmpz/moments.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "cmpz/error.hpp"
#include "numerics_ext.hpp"

namespace cmpz {

namespace {

constexpr int kMaxBellOrder = 10;

struct Expansion {
  double nu;
  double a;    // lambda^{1/nu}
  double q;    // nu^2 - 1
};

Expansion expansion_of(const CmpParams& params) {
  if (!(params.nu() > 0.0)) {
    fail(ErrorCode::domain, "asymptotic statistics require nu > 0");
  }
  const double nu = params.nu();
  const double a = std::exp(std::log(params.lambda()) / nu);
  if (!std::isfinite(a) || a == 0.0) {
    fail(ErrorCode::overflow, "lambda^(1/nu) is not representable");
  }
  return {nu, a, nu * nu - 1.0};
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

double mean_asym(const CmpParams& params, int terms) {
  if (terms < 1 || terms > 4) {
    fail(ErrorCode::invalid_argument, "mean_asym keeps 1 to 4 terms");
  }
  const auto [nu, a, q] = expansion_of(params);
  const std::array<double, 4> bracket = {
      1.0,
      -(nu - 1.0) / (2.0 * nu) / a,
      -q / (24.0 * nu * nu) / (a * a),
      -q / (24.0 * nu * nu * nu) / (a * a * a),
  };
  double sum = 0.0;
  for (int k = terms - 1; k >= 0; --k) sum += bracket[static_cast<std::size_t>(k)];
  return a * sum;
}

double cumulant_asym(const CmpParams& params, int n) {
  if (n < 2) {
    fail(ErrorCode::invalid_argument,
         "cumulant_asym needs n >= 2 (kappa_1 is mean_asym)");
  }
  const auto [nu, a, q] = expansion_of(params);
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  const double two_n = std::ldexp(sign, n);  // (-2)^n
  return a / std::pow(nu, n - 1) *
         (1.0 + sign * q / (24.0 * nu * nu) / (a * a) +
          two_n * q / (48.0 * nu * nu * nu) / (a * a * a));
}

double variance_asym(const CmpParams& params) { return cumulant_asym(params, 2); }

double skewness_asym(const CmpParams& params) {
  const auto [nu, a, q] = expansion_of(params);
  return 1.0 / std::sqrt(a * nu) *
         (1.0 - 5.0 * q / (48.0 * nu * nu) / (a * a) -
          7.0 * q / (24.0 * nu * nu * nu) / (a * a * a));
}

double kurtosis_asym(const CmpParams& params) {
  const auto [nu, a, q] = expansion_of(params);
  return 1.0 / (a * nu) *
         (1.0 - q / (24.0 * nu * nu) / (a * a) +
          q / (6.0 * nu * nu * nu) / (a * a * a));
}

double raw_moment_a2(int n, double nu) {
  const double nd = n;
  return -nd * (nu - 1.0) *
             (6.0 * nd * nd - 3.0 * nd * nu - 15.0 * nd + 4.0 * nu + 10.0) /
             (24.0 * nu * nu) +
         (binomial(n, 3) + 3.0 * binomial(n, 4)) / (nu * nu);
}

double published_a2(int n, double nu) {
  const double nd = n;
  return -nd * (nu - 1.0) *
             (6.0 * nd * nu * nu - 3.0 * nd * nu - 15.0 * nd + 4.0 * nu + 10.0) /
             (24.0 * nu * nu) +
         (binomial(n, 3) + 3.0 * binomial(n, 4)) / (nu * nu);
}

double raw_moment_asym(const CmpParams& params, int n) {
  if (n < 1) fail(ErrorCode::invalid_argument, "raw_moment_asym needs n >= 1");
  const auto [nu, a, q] = expansion_of(params);
  (void)q;
  const double nd = n;
  return std::pow(a, nd) * (1.0 + nd * (nd - nu) / (2.0 * nu) / a +
                            raw_moment_a2(n, nu) / (a * a));
}

CumulantSet cumulants_asym(const CmpParams& params, int n_max) {
  if (n_max < 0 || n_max > kMaxCumulantOrder) {
    fail(ErrorCode::invalid_argument, "cumulant order must lie in [0, 6]");
  }
  CumulantSet out;
  out.provenance = Provenance::asymptotic;
  out.order_in_lambda = 4;
  for (int n = 1; n <= n_max; ++n) {
    out.values.push_back(n == 1 ? mean_asym(params) : cumulant_asym(params, n));
  }
  return out;
}

double skewness_exact(const CmpParams& params, double rel_tol) {
  const CumulantSet k = cumulants_exact(params, 3, rel_tol);
  return k[3] / std::pow(k[2], 1.5);
}

double kurtosis_exact(const CmpParams& params, double rel_tol) {
  const CumulantSet k = cumulants_exact(params, 4, rel_tol);
  return k[4] / (k[2] * k[2]);
}

double bell_partial(int n, int k, std::span<const double> x) {
  if (k < 1 || k > n) {
    fail(ErrorCode::invalid_argument,
         "bell_partial needs 1 <= k <= n, got n=" + std::to_string(n) +
             " k=" + std::to_string(k));
  }
  if (n > kMaxBellOrder) {
    fail(ErrorCode::invalid_argument, "bell_partial supports n <= 10");
  }
  if (x.size() < static_cast<std::size_t>(n - k + 1)) {
    fail(ErrorCode::invalid_argument, "bell_partial needs n-k+1 arguments");
  }
  // table[m][j] = B_{m,j}
  std::array<std::array<double, kMaxBellOrder + 1>, kMaxBellOrder + 1> table{};
  table[0][0] = 1.0;
  for (int j = 1; j <= k; ++j) {
    for (int m = j; m <= n; ++m) {
      double sum = 0.0;
      for (int i = 1; i <= m - j + 1; ++i) {
        sum += binomial(m - 1, i - 1) * x[static_cast<std::size_t>(i - 1)] *
               table[static_cast<std::size_t>(m - i)][static_cast<std::size_t>(j - 1)];
      }
      table[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] = sum;
    }
  }
  return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

MomentSet raw_moments_from_cumulants(const CumulantSet& cumulants) {
  const int n = static_cast<int>(cumulants.size());
  if (n > kMaxBellOrder) {
    fail(ErrorCode::invalid_argument,
         "raw_moments_from_cumulants supports up to 10 cumulants");
  }
  MomentSet out;
  out.provenance = cumulants.provenance;
  std::vector<double> centred = cumulants.values;
  if (!centred.empty()) centred[0] = 0.0;
  std::vector<double> central;
  for (int m = 1; m <= n; ++m) {
    double raw = 0.0, cen = 0.0;
    for (int k = 1; k <= m; ++k) {
      raw += bell_partial(m, k, cumulants.values);
      cen += bell_partial(m, k, centred);
    }
    out.raw.push_back(raw);
    central.push_back(cen);
  }
  out.central = std::move(central);
  return out;
}

double poisson_expectation(double nu, double alpha) {
  if (!(nu > 0.0) || !std::isfinite(nu)) {
    fail(ErrorCode::domain, "poisson_expectation requires nu > 0");
  }
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    fail(ErrorCode::domain, "poisson_expectation requires alpha > 0");
  }
  if (nu == 1.0) return 1.0;
  const long double la = std::log(static_cast<long double>(alpha));
  const long double offset =
      (nu - 1.0L) / 2.0L *
      std::log(2.0L * 3.141592653589793238462643383279503L * alpha);
  // log of Po(alpha)(j) f_alpha(j) = nu log Po(alpha)(j) + offset
  auto log_term = [&](long double j) {
    return nu * (j * la - alpha - detail::log_gamma_ext(j + 1.0L)) + offset;
  };
  const long double peak = std::floor(static_cast<long double>(alpha));
  const long double scale = log_term(peak);
  CompensatedSum<long double> sum;
  for (long double j = 0.0L;; j += 1.0L) {
    const long double term = std::exp(log_term(j) - scale);
    sum.add(term);
    if (j < peak) continue;
    const long double ratio = std::pow(alpha / (j + 1.0L), static_cast<long double>(nu));
    if (ratio < 1.0L && term * ratio / (1.0L - ratio) <= 1e-18L * sum.value()) {
      break;
    }
  }
  return static_cast<double>(std::exp(scale) * sum.value());
}

LimitReport verify_poisson_expectation_limit(double nu,
                                             std::span<const double> alphas) {
  if (!(nu > 0.0) || !std::isfinite(nu)) {
    fail(ErrorCode::domain, "verify_poisson_expectation_limit requires nu > 0");
  }
  if (alphas.size() < 2) {
    fail(ErrorCode::invalid_argument, "need at least two alpha values");
  }
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (!(alphas[i] >= 5.0) || !std::isfinite(alphas[i]) ||
        (i > 0 && !(alphas[i] > alphas[i - 1]))) {
      fail(ErrorCode::invalid_argument,
           "alphas must be finite, strictly increasing and >= 5");
    }
  }
  LimitReport out;
  const double target = 1.0 / std::sqrt(nu);
  std::vector<double> log_alpha, log_dev;
  for (double alpha : alphas) {
    const double e = poisson_expectation(nu, alpha);
    out.alphas.push_back(alpha);
    out.expectations.push_back(e);
    out.deviations.push_back(std::abs(e - target));
    log_alpha.push_back(std::log(alpha));
    log_dev.push_back(std::log(out.deviations.back()));
  }
  if (nu == 1.0) {
    out.degenerate = true;
    out.slope = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  out.slope = regression_slope(log_alpha, log_dev);
  return out;
}

}  // namespace cmpz
