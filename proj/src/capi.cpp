#include "cmpz/cmpz.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <new>
#include <string>
#include <vector>

#include "cmpz/asymptotic.hpp"
#include "cmpz/error.hpp"
#include "cmpz/exact.hpp"
#include "cmpz/moments.hpp"
#include "cmpz/numerics.hpp"
#include "cmpz/table.hpp"
#include "cmpz/verify.hpp"

struct cmpz_asym_eval {
  cmpz::AsymEval eval;
};
struct cmpz_cumulant_set {
  cmpz::CumulantSet set;
};
struct cmpz_moment_set {
  cmpz::MomentSet set;
};
struct cmpz_error_table {
  cmpz::ErrorTable table;
};
struct cmpz_report {
  std::vector<cmpz::CheckResult> checks;
};

namespace {

thread_local std::string last_error;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

cmpz_status map_code(cmpz::ErrorCode code) {
  switch (code) {
    case cmpz::ErrorCode::domain: return CMPZ_ERR_DOMAIN;
    case cmpz::ErrorCode::inadmissible: return CMPZ_ERR_INADMISSIBLE;
    case cmpz::ErrorCode::resource_limit: return CMPZ_ERR_RESOURCE_LIMIT;
    case cmpz::ErrorCode::overflow: return CMPZ_ERR_OVERFLOW;
    case cmpz::ErrorCode::index_out_of_range: return CMPZ_ERR_INDEX;
    case cmpz::ErrorCode::invalid_argument: return CMPZ_ERR_INVALID_ARGUMENT;
    case cmpz::ErrorCode::io: return CMPZ_ERR_IO;
  }
  return CMPZ_ERR_INTERNAL;
}

template <typename F>
cmpz_status guard(F&& body) {
  try {
    body();
    last_error.clear();
    return CMPZ_OK;
  } catch (const cmpz::Error& e) {
    last_error = e.what();
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CMPZ_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CMPZ_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return CMPZ_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) {
    cmpz::fail(cmpz::ErrorCode::invalid_argument,
               std::string(what) + " must not be null");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

cmpz_logvalue to_c(const cmpz::LogValue& v) {
  return {v.log_magnitude, v.log_tail, v.is_zero ? 1 : 0};
}

cmpz::Provenance to_provenance(cmpz_provenance p) {
  if (p == CMPZ_EXACT) return cmpz::Provenance::exact;
  if (p == CMPZ_ASYMPTOTIC) return cmpz::Provenance::asymptotic;
  cmpz::fail(cmpz::ErrorCode::invalid_argument, "unknown method");
}

cmpz_provenance from_provenance(cmpz::Provenance p) {
  return p == cmpz::Provenance::exact ? CMPZ_EXACT : CMPZ_ASYMPTOTIC;
}

double at_order(const std::vector<double>& v, int order) {
  if (order < 1 || static_cast<std::size_t>(order) > v.size()) return kNaN;
  return v[static_cast<std::size_t>(order - 1)];
}

}  // namespace

extern "C" {

const char* cmpz_version(void) { return "1.0.0"; }

const char* cmpz_status_string(cmpz_status status) {
  switch (status) {
    case CMPZ_OK: return "ok";
    case CMPZ_ERR_DOMAIN: return "domain error";
    case CMPZ_ERR_INADMISSIBLE: return "inadmissible parameters";
    case CMPZ_ERR_RESOURCE_LIMIT: return "resource limit";
    case CMPZ_ERR_OVERFLOW: return "overflow";
    case CMPZ_ERR_INDEX: return "index out of range";
    case CMPZ_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CMPZ_ERR_IO: return "i/o error";
    case CMPZ_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* cmpz_last_error(void) { return last_error.c_str(); }

void cmpz_string_free(char* s) { std::free(s); }

int cmpz_is_admissible(double lambda, double nu) {
  return cmpz::is_admissible(lambda, nu) ? 1 : 0;
}

double cmpz_logvalue_to_linear(cmpz_logvalue v) {
  if (v.is_zero) return 0.0;
  return cmpz::LogValue::from_log(v.log_magnitude, v.log_tail).to_linear();
}

cmpz_status cmpz_log_gamma(double x, double* out) {
  return guard([&] {
    require(out, "out");
    *out = cmpz::log_gamma(x);
  });
}

cmpz_status cmpz_z_exact(double lambda, double nu, double rel_tol,
                         cmpz_logvalue* value, cmpz_truncation* report) {
  return guard([&] {
    require(value, "value");
    const cmpz::ExactZ z = cmpz::z_exact(cmpz::CmpParams(lambda, nu), rel_tol);
    *value = to_c(z.value);
    if (report != nullptr) {
      *report = {z.report.terms_used, z.report.tail_bound_log, z.report.peak_index};
    }
  });
}

cmpz_status cmpz_log_pmf(double lambda, double nu, uint64_t j, double rel_tol,
                         double* out) {
  return guard([&] {
    require(out, "out");
    *out = cmpz::log_pmf(cmpz::CmpParams(lambda, nu), j, rel_tol);
  });
}

cmpz_status cmpz_raw_moment_exact(double lambda, double nu, int n,
                                  double rel_tol, double* out) {
  return guard([&] {
    require(out, "out");
    *out = cmpz::raw_moment_exact(cmpz::CmpParams(lambda, nu), n, rel_tol);
  });
}

cmpz_status cmpz_coeff(int j, double nu, double* out) {
  return guard([&] {
    require(out, "out");
    *out = cmpz::coeff(j, nu);
  });
}

cmpz_status cmpz_asym_eval_create(double lambda, double nu, int order,
                                  cmpz_asym_eval** out) {
  return guard([&] {
    require(out, "out");
    *out = new cmpz_asym_eval{cmpz::z_asymptotic(cmpz::CmpParams(lambda, nu), order)};
  });
}

void cmpz_asym_eval_destroy(cmpz_asym_eval* eval) { delete eval; }

cmpz_logvalue cmpz_asym_eval_value(const cmpz_asym_eval* eval) {
  if (eval == nullptr) return {0.0, 0.0, 1};
  return to_c(eval->eval.value);
}

int cmpz_asym_eval_order(const cmpz_asym_eval* eval) {
  return eval == nullptr ? 0 : eval->eval.order_used;
}

double cmpz_asym_eval_term(const cmpz_asym_eval* eval, int k) {
  if (eval == nullptr || k < 0 ||
      static_cast<std::size_t>(k) >= eval->eval.terms.size()) {
    return kNaN;
  }
  return eval->eval.terms[static_cast<std::size_t>(k)];
}

double cmpz_asym_eval_prefactor_log(const cmpz_asym_eval* eval) {
  return eval == nullptr ? kNaN : eval->eval.prefactor_log;
}

double cmpz_asym_eval_series_sum(const cmpz_asym_eval* eval) {
  return eval == nullptr ? kNaN : eval->eval.series_sum;
}

int cmpz_asym_eval_negative(const cmpz_asym_eval* eval) {
  return eval != nullptr && eval->eval.negative ? 1 : 0;
}

cmpz_status cmpz_percent_error(double lambda, double nu, int order,
                               double rel_tol, double* out) {
  return guard([&] {
    require(out, "out");
    *out = cmpz::percent_error(cmpz::CmpParams(lambda, nu), order, rel_tol);
  });
}

cmpz_status cmpz_verify_inverse_factorial(double nu, double t, int terms,
                                          double* out) {
  return guard([&] {
    require(out, "out");
    *out = cmpz::verify_inverse_factorial(nu, t, terms);
  });
}

cmpz_status cmpz_statistic_value(double lambda, double nu, cmpz_statistic which,
                                 cmpz_provenance method, double rel_tol,
                                 double* out) {
  return guard([&] {
    require(out, "out");
    const cmpz::CmpParams p(lambda, nu);
    const bool exact = to_provenance(method) == cmpz::Provenance::exact;
    switch (which) {
      case CMPZ_MEAN:
        *out = exact ? cmpz::raw_moment_exact(p, 1, rel_tol) : cmpz::mean_asym(p);
        return;
      case CMPZ_VARIANCE:
        *out = exact ? cmpz::cumulants_exact(p, 2, rel_tol)[2] : cmpz::variance_asym(p);
        return;
      case CMPZ_SKEWNESS:
        *out = exact ? cmpz::skewness_exact(p, rel_tol) : cmpz::skewness_asym(p);
        return;
      case CMPZ_KURTOSIS:
        *out = exact ? cmpz::kurtosis_exact(p, rel_tol) : cmpz::kurtosis_asym(p);
        return;
    }
    cmpz::fail(cmpz::ErrorCode::invalid_argument, "unknown statistic");
  });
}

cmpz_status cmpz_raw_moment_asym(double lambda, double nu, int n, double* out) {
  return guard([&] {
    require(out, "out");
    *out = cmpz::raw_moment_asym(cmpz::CmpParams(lambda, nu), n);
  });
}

cmpz_status cmpz_bell_partial(int n, int k, const double* x, size_t len,
                              double* out) {
  return guard([&] {
    require(out, "out");
    if (len > 0) require(x, "x");
    *out = cmpz::bell_partial(n, k, std::span<const double>(x, len));
  });
}

cmpz_status cmpz_cumulants(double lambda, double nu, int n_max,
                           cmpz_provenance method, double rel_tol,
                           cmpz_cumulant_set** out) {
  return guard([&] {
    require(out, "out");
    const cmpz::CmpParams p(lambda, nu);
    cmpz::CumulantSet set = to_provenance(method) == cmpz::Provenance::exact
                                ? cmpz::cumulants_exact(p, n_max, rel_tol)
                                : cmpz::cumulants_asym(p, n_max);
    *out = new cmpz_cumulant_set{std::move(set)};
  });
}

void cmpz_cumulant_set_destroy(cmpz_cumulant_set* set) { delete set; }

size_t cmpz_cumulant_set_size(const cmpz_cumulant_set* set) {
  return set == nullptr ? 0 : set->set.size();
}

double cmpz_cumulant_set_value(const cmpz_cumulant_set* set, int order) {
  return set == nullptr ? kNaN : at_order(set->set.values, order);
}

cmpz_provenance cmpz_cumulant_set_provenance(const cmpz_cumulant_set* set) {
  return set == nullptr ? CMPZ_EXACT : from_provenance(set->set.provenance);
}

cmpz_status cmpz_moments(double lambda, double nu, int n_max,
                         cmpz_provenance method, double rel_tol,
                         cmpz_moment_set** out) {
  return guard([&] {
    require(out, "out");
    const cmpz::CmpParams p(lambda, nu);
    cmpz::MomentSet set;
    set.provenance = to_provenance(method);
    if (set.provenance == cmpz::Provenance::exact) {
      set.raw = cmpz::raw_moments_exact(p, n_max, rel_tol);
      set.central = cmpz::central_moments_exact(p, n_max, rel_tol);
    } else {
      if (n_max < 0 || n_max > cmpz::kMaxRawMomentOrder) {
        cmpz::fail(cmpz::ErrorCode::invalid_argument,
                   "raw moment order must lie in [0, 10]");
      }
      for (int n = 1; n <= n_max; ++n) set.raw.push_back(cmpz::raw_moment_asym(p, n));
    }
    *out = new cmpz_moment_set{std::move(set)};
  });
}

cmpz_status cmpz_moments_from_cumulants(const cmpz_cumulant_set* set,
                                        cmpz_moment_set** out) {
  return guard([&] {
    require(set, "set");
    require(out, "out");
    *out = new cmpz_moment_set{cmpz::raw_moments_from_cumulants(set->set)};
  });
}

void cmpz_moment_set_destroy(cmpz_moment_set* set) { delete set; }

size_t cmpz_moment_set_size(const cmpz_moment_set* set) {
  return set == nullptr ? 0 : set->set.raw.size();
}

double cmpz_moment_set_raw(const cmpz_moment_set* set, int order) {
  return set == nullptr ? kNaN : at_order(set->set.raw, order);
}

int cmpz_moment_set_has_central(const cmpz_moment_set* set) {
  return set != nullptr && set->set.central.has_value() ? 1 : 0;
}

double cmpz_moment_set_central(const cmpz_moment_set* set, int order) {
  if (set == nullptr || !set->set.central) return kNaN;
  return at_order(*set->set.central, order);
}

cmpz_provenance cmpz_moment_set_provenance(const cmpz_moment_set* set) {
  return set == nullptr ? CMPZ_EXACT : from_provenance(set->set.provenance);
}

cmpz_status cmpz_error_table_preset(const char* name, double rel_tol,
                                    cmpz_error_table** out) {
  return guard([&] {
    require(name, "name");
    require(out, "out");
    *out = new cmpz_error_table{cmpz::preset_table(name, rel_tol)};
  });
}

cmpz_status cmpz_error_table_custom(const double* lambdas, size_t n_lambda,
                                    const double* nus, size_t n_nu,
                                    const int* orders, size_t n_orders,
                                    double rel_tol, cmpz_error_table** out) {
  return guard([&] {
    require(out, "out");
    if (n_lambda > 0) require(lambdas, "lambdas");
    if (n_nu > 0) require(nus, "nus");
    if (n_orders > 0) require(orders, "orders");
    *out = new cmpz_error_table{cmpz::make_error_table(
        std::vector<double>(lambdas, lambdas + n_lambda),
        std::vector<double>(nus, nus + n_nu),
        std::vector<int>(orders, orders + n_orders), rel_tol)};
  });
}

cmpz_status cmpz_error_table_parse_csv(const char* text, cmpz_error_table** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new cmpz_error_table{cmpz::parse_csv(text)};
  });
}

cmpz_status cmpz_error_table_read_csv(const char* path, cmpz_error_table** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = new cmpz_error_table{cmpz::read_csv_file(path)};
  });
}

void cmpz_error_table_destroy(cmpz_error_table* table) { delete table; }

size_t cmpz_error_table_cell_count(const cmpz_error_table* table) {
  return table == nullptr ? 0 : table->table.cells.size();
}

cmpz_status cmpz_error_table_cell(const cmpz_error_table* table, size_t index,
                                  double* lambda, double* nu, int* order,
                                  double* value, int* overflow) {
  return guard([&] {
    require(table, "table");
    if (index >= table->table.cells.size()) {
      cmpz::fail(cmpz::ErrorCode::index_out_of_range, "cell index out of range");
    }
    const cmpz::TableCell& c = table->table.cells[index];
    if (lambda != nullptr) *lambda = c.lambda;
    if (nu != nullptr) *nu = c.nu;
    if (order != nullptr) *order = c.order;
    if (value != nullptr) *value = c.value;
    if (overflow != nullptr) *overflow = c.overflow ? 1 : 0;
  });
}

cmpz_status cmpz_error_table_to_csv(const cmpz_error_table* table, int raw,
                                    char** out) {
  return guard([&] {
    require(table, "table");
    require(out, "out");
    *out = copy_string(cmpz::to_csv(table->table, raw != 0));
  });
}

cmpz_status cmpz_error_table_write_csv(const cmpz_error_table* table,
                                       const char* path, int raw) {
  return guard([&] {
    require(table, "table");
    require(path, "path");
    cmpz::write_csv_file(table->table, path, raw != 0);
  });
}

cmpz_status cmpz_error_table_render(const cmpz_error_table* table, char** out) {
  return guard([&] {
    require(table, "table");
    require(out, "out");
    *out = copy_string(cmpz::render(table->table));
  });
}

cmpz_status cmpz_format_cell(double value, char** out) {
  return guard([&] {
    require(out, "out");
    *out = copy_string(cmpz::format_cell(value));
  });
}

cmpz_status cmpz_verify_run(const char* suite, cmpz_report** out) {
  return guard([&] {
    require(suite, "suite");
    require(out, "out");
    *out = new cmpz_report{cmpz::run_verify_suite(suite)};
  });
}

void cmpz_report_destroy(cmpz_report* report) { delete report; }

size_t cmpz_report_size(const cmpz_report* report) {
  return report == nullptr ? 0 : report->checks.size();
}

const char* cmpz_report_name(const cmpz_report* report, size_t i) {
  if (report == nullptr || i >= report->checks.size()) return "";
  return report->checks[i].name.c_str();
}

int cmpz_report_passed(const cmpz_report* report, size_t i) {
  if (report == nullptr || i >= report->checks.size()) return 0;
  return report->checks[i].passed ? 1 : 0;
}

const char* cmpz_report_detail(const cmpz_report* report, size_t i) {
  if (report == nullptr || i >= report->checks.size()) return "";
  return report->checks[i].detail.c_str();
}

int cmpz_report_all_passed(const cmpz_report* report) {
  if (report == nullptr) return 0;
  for (const auto& c : report->checks) {
    if (!c.passed) return 0;
  }
  return 1;
}

}  // extern "C"
