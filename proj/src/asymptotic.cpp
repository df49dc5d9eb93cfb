#include "cmpz/asymptotic.hpp"

#include <quadmath.h>

#include <cmath>
#include <limits>
#include <string>

#include "cmpz/error.hpp"

namespace cmpz {

namespace {

using quad = __float128;

const std::array<CoeffPolynomial, kCoefficientCount> kCoefficients = {{
    {0, {1}, 1},
    {1, {1}, 24},
    {2, {1, 23}, 1152},
    {3, {5, -298, 11237}, 414720},
    {4, {5, -1887, -241041, 2482411}, 39813120},
    {5, {7, -7420, 1451274, -220083004, 1363929895}, 6688604160},
    {6,
     {35, -78295, 76299326, 25171388146, -915974552561, 4175309343349},
     4815794995200},
    {7,
     {5, -20190, 45700491, -19956117988, 7134232164555, -142838662997982,
      525035501918789},
     115579079884800},
}};

template <typename Real>
Real evaluate_coeff(const CoeffPolynomial& c, Real nu) {
  const Real nu2 = nu * nu;
  Real p = 0;
  for (std::int64_t a : c.numerator) p = p * nu2 + static_cast<Real>(a);
  if (c.index > 0) p *= nu2 - 1;
  return p / static_cast<Real>(c.denominator);
}

void check_order(int order) {
  if (order < 1 || order > kCoefficientCount) {
    fail(ErrorCode::index_out_of_range,
         "expansion order must lie in [1, 8], got " + std::to_string(order));
  }
}

// ln Gamma in binary128: shift to x >= 30, then Stirling with B_2..B_30.
quad log_gamma_quad(quad x) {
  static constexpr std::array<std::pair<double, double>, 15> kBernoulli = {{
      {1, 6},
      {-1, 30},
      {1, 42},
      {-1, 30},
      {5, 66},
      {-691, 2730},
      {7, 6},
      {-3617, 510},
      {43867, 798},
      {-174611, 330},
      {854513, 138},
      {-236364091, 2730},
      {8553103, 6},
      {-23749461029.0, 870},
      {8615841276005.0, 14322},
  }};
  quad shift = 0;
  quad product = 1;
  while (x < 30) {
    product *= x;
    x += 1;
  }
  if (product != 1) shift = logq(product);
  const quad inv = 1 / x;
  const quad inv2 = inv * inv;
  quad series = 0;
  quad power = inv;
  for (std::size_t k = 0; k < kBernoulli.size(); ++k) {
    const quad two_k = 2 * static_cast<quad>(k + 1);
    const quad b = static_cast<quad>(kBernoulli[k].first) /
                   static_cast<quad>(kBernoulli[k].second);
    series += b / (two_k * (two_k - 1)) * power;
    power *= inv2;
  }
  const quad half_log_2pi = logq(2 * acosq(static_cast<quad>(-1))) / 2;
  return (x - static_cast<quad>(0.5)) * logq(x) - x + half_log_2pi + series - shift;
}

}  // namespace

double CoeffPolynomial::evaluate(double nu) const {
  return static_cast<double>(evaluate_coeff<long double>(*this, nu));
}

long double CoeffPolynomial::evaluate(long double nu) const {
  return evaluate_coeff<long double>(*this, nu);
}

const std::array<CoeffPolynomial, kCoefficientCount>& coefficient_table() {
  return kCoefficients;
}

double coeff(int j, double nu) {
  if (j < 0 || j >= kCoefficientCount) {
    fail(ErrorCode::index_out_of_range,
         "coefficient index must lie in [0, 7], got " + std::to_string(j));
  }
  if (!(nu > 0.0) || !std::isfinite(nu)) {
    fail(ErrorCode::domain, "coefficients are defined for nu > 0");
  }
  return kCoefficients[static_cast<std::size_t>(j)].evaluate(nu);
}

AsymEval z_asymptotic(const CmpParams& params, int order) {
  check_order(order);
  if (!(params.nu() > 0.0)) {
    fail(ErrorCode::domain,
         "the asymptotic expansion requires nu > 0 (got nu = 0)");
  }
  const long double nu = params.nu();
  const long double log_lambda = std::log(static_cast<long double>(params.lambda()));
  const long double a = std::exp(log_lambda / nu);
  const long double nu_a = nu * a;
  if (!std::isfinite(static_cast<double>(nu_a))) {
    fail(ErrorCode::overflow, "lambda^(1/nu) overflows for these parameters");
  }
  const long double log_2pi = std::log(2.0L * 3.141592653589793238462643383279503L);
  const long double prefactor = nu_a - (nu - 1.0L) / (2.0L * nu) * log_lambda -
                                (nu - 1.0L) / 2.0L * log_2pi -
                                0.5L * std::log(nu);

  AsymEval out;
  out.order_used = order;
  out.prefactor_log = static_cast<double>(prefactor);
  out.terms.resize(static_cast<std::size_t>(order));
  out.terms[0] = 1.0;
  CompensatedSum<long double> corrections;
  const long double y = 1.0L / nu_a;
  long double y_power = 1.0L;
  for (int k = 1; k < order; ++k) {
    y_power *= y;
    const long double term =
        kCoefficients[static_cast<std::size_t>(k)].evaluate(nu) * y_power;
    out.terms[static_cast<std::size_t>(k)] = static_cast<double>(term);
    corrections.add(term);
  }
  const long double rest = corrections.value();
  out.series_sum = static_cast<double>(1.0L + rest);
  if (!std::isfinite(out.series_sum)) {
    fail(ErrorCode::overflow, "non-finite series term");
  }
  if (1.0L + rest == 0.0L) {
    out.value = LogValue::zero();
  } else if (rest > -1.0L) {
    out.value = LogValue::from_log(prefactor + std::log1p(rest));
  } else {
    out.negative = true;
    out.value = LogValue::from_log(prefactor + std::log(-(1.0L + rest)));
  }
  return out;
}

double percent_error(const AsymEval& approx, const LogValue& exact) {
  if (approx.value.is_zero) return -100.0;
  const double d = log_ratio(approx.value, exact);
  if (approx.negative) return -100.0 * (std::exp(d) + 1.0);
  return 100.0 * std::expm1(d);
}

double percent_error(const CmpParams& params, int order, double rel_tol) {
  const AsymEval approx = z_asymptotic(params, order);
  const ExactZ exact = z_exact(params, rel_tol);
  return percent_error(approx, exact.value);
}

double verify_inverse_factorial(double nu_in, double t_in, int terms) {
  check_order(terms);
  if (!(nu_in > 0.0) || !std::isfinite(nu_in)) {
    fail(ErrorCode::domain, "verify_inverse_factorial requires nu > 0");
  }
  if (!(t_in > 0.0) || !std::isfinite(t_in)) {
    fail(ErrorCode::domain, "verify_inverse_factorial requires t > 0");
  }
  const quad nu = nu_in;
  const quad t = t_in;
  const quad b = nu * t + (1 + nu) / 2;
  const quad nu2 = nu * nu;

  // sum_j c_j / Gamma(b + j) = (1 / Gamma(b)) sum_j c_j / (b)_j
  quad sum = 0;
  quad pochhammer = 1;
  for (int j = 0; j < terms; ++j) {
    const CoeffPolynomial& c = kCoefficients[static_cast<std::size_t>(j)];
    quad p = 0;
    for (std::int64_t a : c.numerator) p = p * nu2 + static_cast<quad>(a);
    if (j > 0) p *= nu2 - 1;
    sum += p / static_cast<quad>(c.denominator) / pochhammer;
    pochhammer *= b + j;
  }
  if (!(sum > 0)) {
    fail(ErrorCode::overflow,
         "inverse factorial partial sum is not positive at these arguments");
  }
  const quad lhs = -nu * log_gamma_quad(t + 1);
  const quad rhs = nu * (t + static_cast<quad>(0.5)) * logq(nu) -
                   (nu - 1) / 2 * logq(2 * acosq(static_cast<quad>(-1))) - log_gamma_quad(b) +
                   logq(sum);
  const quad diff = rhs - lhs;
  if (!finiteq(diff)) {
    fail(ErrorCode::overflow, "non-finite log-gamma in inverse factorial check");
  }
  return static_cast<double>(fabsq(expm1q(diff)));
}

}  // namespace cmpz
