#include "cmpz/exact.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "cmpz/error.hpp"
#include "numerics_ext.hpp"

namespace cmpz {

bool is_admissible(double lambda, double nu) {
  if (!std::isfinite(lambda) || !std::isfinite(nu)) return false;
  if (lambda > 0.0 && nu > 0.0) return true;
  return nu == 0.0 && lambda > 0.0 && lambda < 1.0;
}

CmpParams::CmpParams(double lambda, double nu) : lambda_(lambda), nu_(nu) {
  if (!is_admissible(lambda, nu)) {
    std::ostringstream msg;
    msg << "inadmissible parameters (lambda=" << lambda << ", nu=" << nu
        << "): need lambda>0 and nu>0, or 0<lambda<1 and nu=0";
    fail(ErrorCode::inadmissible, msg.str());
  }
}

namespace {

void check_tolerance(double rel_tol) {
  if (!(rel_tol > 0.0 && rel_tol <= 0.1)) {
    fail(ErrorCode::invalid_argument,
         "rel_tol must lie in (0, 0.1], got " + std::to_string(rel_tol));
  }
}

struct SeriesSums {
  // sums[k] = sum_j (j - center)^k t_j / t_peak
  std::vector<long double> sums;
  std::vector<long double> abs_sums;
  long double log_scale = 0.0L;  // log t_peak
  long double tail_bound = 0.0L;  // on sums[0], in scaled units
  std::uint64_t peak = 0;
  std::uint64_t terms = 0;
};

// Index of the largest term: terms grow while lambda / j^nu > 1.
std::uint64_t peak_index(const CmpParams& p, std::uint64_t max_terms) {
  if (p.geometric()) return 0;
  const long double log_alpha =
      std::log(static_cast<long double>(p.lambda())) / p.nu();
  if (log_alpha >= std::log(static_cast<long double>(max_terms))) {
    std::ostringstream msg;
    msg << "peak index lambda^(1/nu) ~ exp(" << static_cast<double>(log_alpha)
        << ") exceeds the term cap of " << max_terms;
    fail(ErrorCode::resource_limit, msg.str());
  }
  const long double alpha = std::exp(log_alpha);
  if (alpha <= 1.0L) return 0;
  return static_cast<std::uint64_t>(std::ceil(alpha)) - 1;
}

// Walks t_j = lambda^j / (j!)^nu from j = 0, scaled by the peak term, until
// every weighted tail is certified below rel_tol / 2 of its absolute sum.
SeriesSums sum_series(const CmpParams& p, int k_max, long double center,
                      double rel_tol, std::uint64_t max_terms) {
  const long double log_lambda = std::log(static_cast<long double>(p.lambda()));
  const long double nu = p.nu();
  // log(t_j / t_{j-1})
  auto increment = [&](std::uint64_t j) -> long double {
    return log_lambda - nu * std::log(static_cast<long double>(j));
  };

  SeriesSums out;
  out.peak = peak_index(p, max_terms);
  {
    CompensatedSum<long double> log_peak;
    for (std::uint64_t j = 1; j <= out.peak; ++j) log_peak.add(increment(j));
    out.log_scale = log_peak.value();
  }

  const auto n = static_cast<std::size_t>(k_max) + 1;
  std::vector<CompensatedSum<long double>> acc(n);
  std::vector<long double> abs_acc(n, 0.0L);
  std::vector<long double> weight(n);
  const long double half_tol = 0.5L * rel_tol;

  CompensatedSum<long double> log_term;  // log(t_j), restarted from j = 0
  for (std::uint64_t j = 0;; ++j) {
    if (j >= max_terms) {
      std::ostringstream msg;
      msg << "tolerance " << rel_tol << " not certified within the term cap of "
          << max_terms;
      fail(ErrorCode::resource_limit, msg.str());
    }
    if (j > 0) log_term.add(increment(j));
    const long double scaled = std::exp(log_term.value() - out.log_scale);
    const long double offset = static_cast<long double>(j) - center;
    weight[0] = scaled;
    for (std::size_t k = 1; k < n; ++k) weight[k] = weight[k - 1] * offset;
    for (std::size_t k = 0; k < n; ++k) {
      acc[k].add(weight[k]);
      abs_acc[k] += std::abs(weight[k]);
    }
    if (j < out.peak) continue;

    // Past the peak the term ratio r_i = lambda / (i+1)^nu is decreasing, and
    // so is ((i+1-c)/(i-c))^k for i > c; both tails are dominated by
    // geometric series.
    const long double ratio = std::exp(increment(j + 1));
    if (ratio >= 1.0L) continue;
    bool certified = true;
    long double tail0 = 0.0L;
    for (std::size_t k = 0; k < n && certified; ++k) {
      long double rho = ratio;
      if (k > 0) {
        if (offset < 1.0L) {
          certified = weight[k] == 0.0L && scaled == 0.0L;
          continue;
        }
        rho *= std::pow((offset + 1.0L) / offset, static_cast<long double>(k));
      }
      if (rho >= 1.0L) {
        certified = false;
        break;
      }
      const long double bound = std::abs(weight[k]) * rho / (1.0L - rho);
      if (k == 0) tail0 = bound;
      certified = bound <= half_tol * abs_acc[k];
    }
    if (certified) {
      out.terms = j + 1;
      out.tail_bound = tail0;
      break;
    }
  }

  out.sums.resize(n);
  out.abs_sums = abs_acc;
  for (std::size_t k = 0; k < n; ++k) out.sums[k] = acc[k].value();
  return out;
}

void check_order(int n, int cap, const char* what) {
  if (n < 0 || n > cap) {
    fail(ErrorCode::invalid_argument,
         std::string(what) + " order must lie in [0, " + std::to_string(cap) +
             "], got " + std::to_string(n));
  }
}

}  // namespace

ExactZ z_exact(const CmpParams& params, double rel_tol,
               std::uint64_t max_terms) {
  check_tolerance(rel_tol);
  ExactZ out;
  if (params.geometric()) {
    out.value = LogValue::from_log(
        -std::log1p(-static_cast<long double>(params.lambda())));
    out.report.tail_bound_log = -std::numeric_limits<double>::infinity();
    return out;
  }
  const SeriesSums s = sum_series(params, 0, 0.0L, rel_tol, max_terms);
  out.value = LogValue::from_log(s.log_scale + std::log(s.sums[0]));
  out.report.terms_used = s.terms;
  out.report.peak_index = s.peak;
  out.report.tail_bound_log =
      s.tail_bound > 0.0L
          ? static_cast<double>(s.log_scale + std::log(s.tail_bound))
          : -std::numeric_limits<double>::infinity();
  return out;
}

double log_pmf(const CmpParams& params, std::uint64_t j, double rel_tol,
               std::uint64_t max_terms) {
  const ExactZ z = z_exact(params, rel_tol, max_terms);
  const auto jl = static_cast<long double>(j);
  long double log_term = jl * std::log(static_cast<long double>(params.lambda()));
  if (!params.geometric()) {
    log_term -= params.nu() * detail::log_gamma_ext(jl + 1.0L);
  }
  return static_cast<double>(
      (log_term - z.value.log_magnitude) - z.value.log_tail);
}

std::vector<double> raw_moments_exact(const CmpParams& params, int n_max,
                                      double rel_tol,
                                      std::uint64_t max_terms) {
  check_tolerance(rel_tol);
  check_order(n_max, kMaxRawMomentOrder, "raw moment");
  const SeriesSums s = sum_series(params, n_max, 0.0L, rel_tol, max_terms);
  std::vector<double> out(static_cast<std::size_t>(n_max));
  for (int k = 1; k <= n_max; ++k) {
    out[k - 1] = static_cast<double>(s.sums[k] / s.sums[0]);
  }
  return out;
}

double raw_moment_exact(const CmpParams& params, int n, double rel_tol,
                        std::uint64_t max_terms) {
  check_order(n, kMaxRawMomentOrder, "raw moment");
  if (n == 0) {
    check_tolerance(rel_tol);
    return 1.0;
  }
  return raw_moments_exact(params, n, rel_tol, max_terms).back();
}

std::vector<double> central_moments_exact(const CmpParams& params, int n_max,
                                          double rel_tol,
                                          std::uint64_t max_terms) {
  check_tolerance(rel_tol);
  check_order(n_max, kMaxRawMomentOrder, "central moment");
  if (n_max == 0) return {};
  const SeriesSums first = sum_series(params, 1, 0.0L, rel_tol, max_terms);
  const long double mean = first.sums[1] / first.sums[0];
  const SeriesSums s = sum_series(params, n_max, mean, rel_tol, max_terms);
  std::vector<double> out(static_cast<std::size_t>(n_max));
  out[0] = 0.0;
  for (int k = 2; k <= n_max; ++k) {
    out[k - 1] = static_cast<double>(s.sums[k] / s.sums[0]);
  }
  return out;
}

std::vector<double> cumulants_from_moments(const std::vector<double>& moments) {
  const std::size_t n = moments.size();
  std::vector<double> kappa(n);
  // binomial row C(m-1, k-1), rebuilt per m
  std::vector<double> binom;
  for (std::size_t m = 1; m <= n; ++m) {
    binom.assign(m, 1.0);
    for (std::size_t k = 1; k + 1 < m; ++k) {
      binom[k] = binom[k - 1] * static_cast<double>(m - k) /
                 static_cast<double>(k);
    }
    double value = moments[m - 1];
    for (std::size_t k = 1; k < m; ++k) {
      value -= binom[k - 1] * kappa[k - 1] * moments[m - k - 1];
    }
    kappa[m - 1] = value;
  }
  return kappa;
}

CumulantSet cumulants_exact(const CmpParams& params, int n_max, double rel_tol,
                            std::uint64_t max_terms) {
  check_order(n_max, kMaxCumulantOrder, "cumulant");
  CumulantSet out;
  out.provenance = Provenance::exact;
  if (n_max == 0) {
    check_tolerance(rel_tol);
    return out;
  }
  const double mean = raw_moment_exact(params, 1, rel_tol, max_terms);
  if (n_max == 1) {
    out.values = {mean};
    return out;
  }
  // Cumulants of X - mean equal those of X from order 2 on.
  out.values = cumulants_from_moments(
      central_moments_exact(params, n_max, rel_tol, max_terms));
  out.values[0] = mean;
  return out;
}

}  // namespace cmpz
