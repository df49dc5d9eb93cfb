#pragma once

#include <cstdint>
#include <vector>

#include "cmpz/moment_types.hpp"
#include "cmpz/numerics.hpp"

namespace cmpz {

inline constexpr std::uint64_t kDefaultTermCap = 10'000'000;
inline constexpr int kMaxRawMomentOrder = 10;
inline constexpr int kMaxCumulantOrder = 6;

/// True iff (lambda > 0 and nu > 0) or (0 < lambda < 1 and nu == 0).
bool is_admissible(double lambda, double nu);

/// Validated COM-Poisson parameters.
class CmpParams {
 public:
  /// Throws Error(inadmissible) unless is_admissible(lambda, nu).
  CmpParams(double lambda, double nu);

  double lambda() const { return lambda_; }
  double nu() const { return nu_; }
  /// nu == 0: the geometric case.
  bool geometric() const { return nu_ == 0.0; }

 private:
  double lambda_;
  double nu_;
};

struct TruncationReport {
  std::uint64_t terms_used = 0;
  /// log of the certified bound on the omitted remainder (-inf if none).
  double tail_bound_log = 0.0;
  /// Index of the largest term, floor(lambda^{1/nu}) up to ties.
  std::uint64_t peak_index = 0;
};

struct ExactZ {
  LogValue value;
  TruncationReport report;
};

/// Z(lambda, nu) by summing the defining series outward past its peak until a
/// geometric tail bound certifies rel_tol. rel_tol must lie in (0, 0.1].
/// nu == 0 uses the closed form 1 / (1 - lambda) and reports zero terms.
ExactZ z_exact(const CmpParams& params, double rel_tol,
               std::uint64_t max_terms = kDefaultTermCap);

/// log P(X = j).
double log_pmf(const CmpParams& params, std::uint64_t j, double rel_tol,
               std::uint64_t max_terms = kDefaultTermCap);

/// E[X^n], 0 <= n <= 10.
double raw_moment_exact(const CmpParams& params, int n, double rel_tol,
                        std::uint64_t max_terms = kDefaultTermCap);

/// mu'_1..mu'_{n_max} from a single pass; result[i] = mu'_{i+1}.
std::vector<double> raw_moments_exact(const CmpParams& params, int n_max,
                                      double rel_tol,
                                      std::uint64_t max_terms = kDefaultTermCap);

/// mu_1..mu_{n_max} about the exact mean; result[0] == 0.
std::vector<double> central_moments_exact(
    const CmpParams& params, int n_max, double rel_tol,
    std::uint64_t max_terms = kDefaultTermCap);

/// kappa_1..kappa_{n_max}, n_max <= 6.
CumulantSet cumulants_exact(const CmpParams& params, int n_max, double rel_tol,
                            std::uint64_t max_terms = kDefaultTermCap);

/// Moment-cumulant recursion
///   kappa_n = m_n - sum_{k=1}^{n-1} C(n-1, k-1) kappa_k m_{n-k}
/// on moments m_1..m_n (moments[i] = m_{i+1}).
std::vector<double> cumulants_from_moments(const std::vector<double>& moments);

}  // namespace cmpz
