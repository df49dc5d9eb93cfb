#pragma once

#include <cmath>
#include <limits>
#include <span>

namespace cmpz {

/// A nonnegative real stored by its natural logarithm.
///
/// The logarithm is kept as an unevaluated sum `head + tail` with
/// |tail| <= ulp(head), so that quantities such as Z(1.9, 0.1) ~ 5.5e28 keep
/// close to full double precision after a round trip through the log domain.
/// When `is_zero` is set both words are ignored.
struct LogValue {
  double log_magnitude = 0.0;
  double log_tail = 0.0;
  bool is_zero = true;

  static LogValue zero() { return {}; }
  static LogValue from_log(double log_x, double tail = 0.0);
  static LogValue from_log(long double log_x);
  /// x must be finite and >= 0.
  static LogValue from_linear(double x);

  /// log(x) rounded to double; -inf for zero.
  double log() const;
  /// exp of the two-word log; may overflow to +inf.
  double to_linear() const;
};

/// a + b in the linear domain, via the max-shift identity.
LogValue logvalue_add(LogValue a, LogValue b);

/// log(a / b) as a two-word difference collapsed to double. b must be nonzero.
double log_ratio(const LogValue& a, const LogValue& b);

/// ln Gamma(x) for finite x > 0. Throws Error(domain) otherwise.
double log_gamma(double x);

/// Neumaier-compensated running sum.
template <typename Real = double>
class CompensatedSum {
 public:
  void add(Real x) {
    const Real t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  CompensatedSum& operator+=(Real x) {
    add(x);
    return *this;
  }

  Real value() const { return sum_ + comp_; }
  /// The two words separately (head, correction).
  Real head() const { return sum_; }
  Real correction() const { return comp_; }

 private:
  Real sum_ = 0;
  Real comp_ = 0;
};

double compensated_sum(std::span<const double> terms);

/// Least-squares slope of y against x. Requires at least two distinct x.
double regression_slope(std::span<const double> x, std::span<const double> y);

}  // namespace cmpz
