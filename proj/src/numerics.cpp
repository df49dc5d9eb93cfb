#include "cmpz/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "cmpz/error.hpp"
#include "numerics_ext.hpp"

namespace cmpz {

namespace {

// (zeta(k) - 1) / k for k = 2..40, so that
//   ln Gamma(2 + z) = (1 - euler_gamma) z + sum_k (zeta(k) - 1)/k (-z)^k,
// valid for |z| < 2.
constexpr std::array<long double, 39> kZetaSeries = {
    0.322467033424113218236L,   0.0673523010531980951332L,
    0.020580808427784547879L,   0.00738555102867398526627L,
    0.00289051033074152328575L, 0.00119275391170326097711L,
    0.000509669524743042422336L, 0.000223154758453579379761L,
    0.0000994575127818085337146L, 0.0000449262367381331417002L,
    0.0000205072127756706915532L, 0.00000943948827526839590399L,
    0.00000437486678990748780418L, 0.00000203921575380136623678L,
    9.55141213040741983286e-7L, 4.49246919876456604329e-7L,
    2.12071848055546658692e-7L, 1.00432248239680996087e-7L,
    4.76981016936398056576e-8L, 2.27110946089431649103e-8L,
    1.08386592148969540911e-8L, 5.18347504197004665512e-9L,
    2.48367454380247831719e-9L, 1.19214014058609120744e-9L,
    5.73136724167886201333e-10L, 2.75952288512423314518e-10L,
    1.33047643742444894815e-10L, 6.42296456383810002208e-11L,
    3.10442477473222727624e-11L, 1.50213840807541421709e-11L,
    7.2759744802390796625e-12L, 3.52774247657591508362e-12L,
    1.7119917905596179086e-12L, 8.3153858414202848198e-13L,
    4.04220052528944006554e-13L, 1.96647563109661649041e-13L,
    9.57363038783855576378e-14L, 4.66407602642837422458e-14L,
    2.27373696006597232063e-14L,
};

constexpr long double kOneMinusEulerGamma = 0.4227843350984671393934879L;
constexpr long double kHalfLog2Pi = 0.918938533204672741780329736406L;

// B_{2k} / (2k (2k - 1)), k = 1..10.
constexpr std::array<long double, 10> kStirling = {
    1.0L / 12.0L,          -1.0L / 360.0L,       1.0L / 1260.0L,
    -1.0L / 1680.0L,       1.0L / 1188.0L,       -691.0L / 360360.0L,
    1.0L / 156.0L,         -3617.0L / 122400.0L, 43867.0L / 244188.0L,
    -174611.0L / 125400.0L};

// ln Gamma(2 + z) for |z| <= 0.5.
long double log_gamma_near_two(long double z) {
  const long double w = -z;
  long double poly = 0.0L;
  for (auto it = kZetaSeries.rbegin(); it != kZetaSeries.rend(); ++it) {
    poly = poly * w + *it;
  }
  return kOneMinusEulerGamma * z + w * w * poly;
}

long double log_gamma_stirling(long double x) {
  const long double inv = 1.0L / x;
  const long double inv2 = inv * inv;
  long double series = 0.0L;
  for (auto it = kStirling.rbegin(); it != kStirling.rend(); ++it) {
    series = series * inv2 + *it;
  }
  return (x - 0.5L) * std::log(x) - x + kHalfLog2Pi + series * inv;
}

}  // namespace

namespace detail {

long double log_gamma_ext(long double x) {
  if (x < 0.5L) {
    return log_gamma_near_two(x) - std::log1p(x) - std::log(x);
  }
  if (x < 1.5L) {
    const long double z = x - 1.0L;
    return log_gamma_near_two(z) - std::log1p(z);
  }
  if (x < 2.5L) {
    return log_gamma_near_two(x - 2.0L);
  }
  if (x < 12.0L) {
    const long double shifts = std::floor(x - 1.5L);
    const long double y = x - shifts;
    long double product = 1.0L;
    for (long double k = 0.0L; k < shifts; k += 1.0L) {
      product *= y + k;
    }
    return log_gamma_near_two(y - 2.0L) + std::log(product);
  }
  return log_gamma_stirling(x);
}

}  // namespace detail

double log_gamma(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    fail(ErrorCode::domain,
         "log_gamma: argument must be finite and positive, got " +
             std::to_string(x));
  }
  return static_cast<double>(detail::log_gamma_ext(x));
}

LogValue LogValue::from_log(double log_x, double tail) {
  if (std::isinf(log_x) && log_x < 0) return zero();
  LogValue v;
  v.is_zero = false;
  v.log_magnitude = log_x + tail;
  v.log_tail = (log_x - v.log_magnitude) + tail;
  return v;
}

LogValue LogValue::from_log(long double log_x) {
  if (std::isinf(log_x) && log_x < 0) return zero();
  const double head = static_cast<double>(log_x);
  return from_log(head, static_cast<double>(log_x - head));
}

LogValue LogValue::from_linear(double x) {
  if (!std::isfinite(x) || x < 0.0) {
    fail(ErrorCode::domain, "LogValue: linear value must be finite and >= 0");
  }
  if (x == 0.0) return zero();
  LogValue v;
  v.is_zero = false;
  v.log_magnitude = std::log(x);
  const double e = std::exp(v.log_magnitude);
  if (std::isfinite(e) && e > 0.0) {
    // x and e agree to ~|log x| ulps, so x - e is exact.
    v.log_tail = std::log1p((x - e) / e);
  }
  return v;
}

double LogValue::log() const {
  if (is_zero) return -std::numeric_limits<double>::infinity();
  return log_magnitude;
}

double LogValue::to_linear() const {
  if (is_zero) return 0.0;
  const double e = std::exp(log_magnitude);
  if (!std::isfinite(e)) return e;
  return std::fma(e, log_tail, e);
}

LogValue logvalue_add(LogValue a, LogValue b) {
  if (a.is_zero) return b;
  if (b.is_zero) return a;
  const bool a_larger =
      a.log_magnitude > b.log_magnitude ||
      (a.log_magnitude == b.log_magnitude && a.log_tail >= b.log_tail);
  const LogValue& hi = a_larger ? a : b;
  const LogValue& lo = a_larger ? b : a;
  const double d =
      (lo.log_magnitude - hi.log_magnitude) + (lo.log_tail - hi.log_tail);
  const double r = std::log1p(std::exp(d));
  // two-sum of hi.log_magnitude + r
  const double s = hi.log_magnitude + r;
  const double bp = s - hi.log_magnitude;
  const double err = (hi.log_magnitude - (s - bp)) + (r - bp);
  return LogValue::from_log(s, err + hi.log_tail);
}

double log_ratio(const LogValue& a, const LogValue& b) {
  if (b.is_zero) {
    fail(ErrorCode::domain, "log_ratio: denominator is zero");
  }
  if (a.is_zero) return -std::numeric_limits<double>::infinity();
  return (a.log_magnitude - b.log_magnitude) + (a.log_tail - b.log_tail);
}

double compensated_sum(std::span<const double> terms) {
  CompensatedSum<double> acc;
  for (double t : terms) acc.add(t);
  return acc.value();
}

double regression_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    fail(ErrorCode::invalid_argument,
         "regression_slope: need two or more paired points");
  }
  const auto n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  if (sxx == 0.0) {
    fail(ErrorCode::invalid_argument, "regression_slope: x values coincide");
  }
  return sxy / sxx;
}

}  // namespace cmpz
