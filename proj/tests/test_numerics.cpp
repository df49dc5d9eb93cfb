#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "cmpz/error.hpp"
#include "cmpz/numerics.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cmpz;

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();

double rel_diff(const LogValue& a, const LogValue& b) {
  return std::abs(std::expm1(log_ratio(a, b)));
}
}  // namespace

TEST_CASE("log_gamma at fixed points") {
  CHECK(std::abs(log_gamma(1.0)) <= kEps);
  CHECK(std::abs(log_gamma(2.0)) <= kEps);
  for (const auto& [x, expected] : oracle::kLogGamma) {
    INFO("x = " << x);
    CHECK(std::abs(log_gamma(x) - expected) <= 8 * kEps * std::abs(expected));
  }
}

TEST_CASE("log_gamma recurrence on random arguments") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> u(std::log(0.1), std::log(1e6));
  for (int i = 0; i < 20000; ++i) {
    const double x = std::exp(u(rng));
    const double lhs = log_gamma(x + 1.0);
    const double rhs = log_gamma(x) + std::log(x);
    const double scale = std::max({std::abs(lhs), std::abs(log_gamma(x)), std::abs(std::log(x))});
    INFO("x = " << x);
    // x + 1 is itself rounded
    const double shift = kEps * (x + 1.0) * std::max(std::log(x + 1.0), 0.6);
    REQUIRE(std::abs(lhs - rhs) <= 8 * kEps * scale + shift);
  }
}

TEST_CASE("log_gamma rejects non-positive and non-finite input") {
  for (double x : {0.0, -1.0, -0.5, std::numeric_limits<double>::infinity(),
                   std::numeric_limits<double>::quiet_NaN()}) {
    try {
      log_gamma(x);
      FAIL("no error for " << x);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::domain);
    }
  }
}

TEST_CASE("LogValue round trip") {
  CHECK(LogValue::from_linear(0.0).is_zero);
  CHECK(LogValue::zero().to_linear() == 0.0);
  CHECK(LogValue::zero().log() == -std::numeric_limits<double>::infinity());
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-300.0, 300.0);
  std::uniform_real_distribution<double> m(1.0, 10.0);
  for (int i = 0; i < 20000; ++i) {
    const double x = m(rng) * std::pow(10.0, std::floor(u(rng)));
    const double back = LogValue::from_linear(x).to_linear();
    INFO("x = " << x);
    REQUIRE(std::abs(back - x) <= 4 * kEps * x);
  }
}

TEST_CASE("logvalue_add examples") {
  const LogValue one = LogValue::from_log(0.0);
  CHECK(std::abs(logvalue_add(one, one).log() - std::log(2.0)) <= kEps);
  const LogValue x = LogValue::from_log(3.25);
  CHECK(logvalue_add(LogValue::zero(), x).log() == 3.25);
  CHECK(logvalue_add(x, LogValue::zero()).log() == 3.25);
  CHECK(logvalue_add(LogValue::zero(), LogValue::zero()).is_zero);

  const LogValue big = LogValue::from_log(std::log(1e300));
  const LogValue sum = logvalue_add(big, big);
  const double expected = std::log(2.0) + std::log(1e300);
  CHECK(std::abs(sum.log() - expected) <= 2 * kEps * expected);
  // far beyond double range, no overflow
  const LogValue huge = LogValue::from_log(1e5);
  CHECK(std::abs(logvalue_add(huge, huge).log() - (1e5 + std::log(2.0))) <= 2 * kEps * 1e5);
}

TEST_CASE("logvalue_add is commutative and associative") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-690.0, 690.0);
  for (int i = 0; i < 20000; ++i) {
    const LogValue a = LogValue::from_log(u(rng));
    const LogValue b = LogValue::from_log(u(rng));
    const LogValue c = LogValue::from_log(u(rng));
    REQUIRE(rel_diff(logvalue_add(a, b), logvalue_add(b, a)) <= 4 * kEps);
    REQUIRE(rel_diff(logvalue_add(logvalue_add(a, b), c),
                     logvalue_add(a, logvalue_add(b, c))) <= 4 * kEps);
  }
}

TEST_CASE("compensated_sum examples") {
  CHECK(compensated_sum({}) == 0.0);
  const std::vector<double> single = {3.5};
  CHECK(compensated_sum(single) == 3.5);
  std::vector<double> terms(1'000'001, 1e-16);
  terms[0] = 1.0;
  CHECK(std::abs(compensated_sum(terms) - oracle::kCompensatedSum) <= 1e-24 + kEps);
  CHECK(compensated_sum(terms) == oracle::kCompensatedSum);
}

TEST_CASE("compensated_sum is insensitive to ordering") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> v(5000);
    for (double& x : v) x = std::exp(u(rng));
    std::sort(v.begin(), v.end());
    const double sorted = compensated_sum(v);
    std::shuffle(v.begin(), v.end(), rng);
    const double shuffled = compensated_sum(v);
    REQUIRE(std::abs(sorted - shuffled) <= 4 * kEps * sorted);
  }
}

TEST_CASE("compensated_sum error bound on cancelling input") {
  // 0.1 * k - 0.1 * k pairs interleaved with a large constant
  std::vector<double> v = {1e16};
  double abs_sum = 1e16;
  for (int k = 1; k <= 1000; ++k) {
    v.push_back(0.1 * k);
    v.push_back(-0.1 * k);
    abs_sum += 0.2 * k;
  }
  v.push_back(1.0);
  CHECK(std::abs(compensated_sum(v) - (1e16 + 1.0)) <= 2 * kEps * abs_sum);
}

TEST_CASE("regression_slope") {
  const std::vector<double> x = {1, 2, 3, 4};
  const std::vector<double> y = {3, 1, -1, -3};
  CHECK(regression_slope(x, y) == doctest::Approx(-2.0).epsilon(1e-15));
  const std::vector<double> same = {2, 2};
  CHECK_THROWS_AS(regression_slope(same, std::vector<double>{1, 2}), Error);
}
