/* C interface to the cmpz library: Conway-Maxwell-Poisson normalizing
 * constant, asymptotic expansion, summary statistics and error tables.
 *
 * Every fallible call returns a cmpz_status. On failure the out parameters
 * are left untouched and cmpz_last_error() describes the problem (per
 * thread). Handles are opaque and must be released with their _destroy
 * function; strings returned through char** with cmpz_string_free. */
#ifndef CMPZ_H
#define CMPZ_H

#include <stddef.h>
#include <stdint.h>

#if defined(CMPZ_BUILDING_LIBRARY)
#define CMPZ_API __attribute__((visibility("default")))
#else
#define CMPZ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cmpz_status {
  CMPZ_OK = 0,
  CMPZ_ERR_DOMAIN = 1,
  CMPZ_ERR_INADMISSIBLE = 2,
  CMPZ_ERR_RESOURCE_LIMIT = 3,
  CMPZ_ERR_OVERFLOW = 4,
  CMPZ_ERR_INDEX = 5,
  CMPZ_ERR_INVALID_ARGUMENT = 6,
  CMPZ_ERR_IO = 7,
  CMPZ_ERR_INTERNAL = 8
} cmpz_status;

typedef enum cmpz_provenance {
  CMPZ_EXACT = 0,
  CMPZ_ASYMPTOTIC = 1
} cmpz_provenance;

typedef enum cmpz_statistic {
  CMPZ_MEAN = 0,
  CMPZ_VARIANCE = 1,
  CMPZ_SKEWNESS = 2,
  CMPZ_KURTOSIS = 3
} cmpz_statistic;

/* log-domain value; value = exp(log_magnitude + log_tail) unless is_zero */
typedef struct cmpz_logvalue {
  double log_magnitude;
  double log_tail;
  int is_zero;
} cmpz_logvalue;

typedef struct cmpz_truncation {
  uint64_t terms_used;
  double tail_bound_log;
  uint64_t peak_index;
} cmpz_truncation;

typedef struct cmpz_asym_eval cmpz_asym_eval;
typedef struct cmpz_cumulant_set cmpz_cumulant_set;
typedef struct cmpz_moment_set cmpz_moment_set;
typedef struct cmpz_error_table cmpz_error_table;
typedef struct cmpz_report cmpz_report;

CMPZ_API const char* cmpz_version(void);
CMPZ_API const char* cmpz_status_string(cmpz_status status);
/* Message of the last failed call on this thread ("" if none). */
CMPZ_API const char* cmpz_last_error(void);
CMPZ_API void cmpz_string_free(char* s);

CMPZ_API int cmpz_is_admissible(double lambda, double nu);
CMPZ_API double cmpz_logvalue_to_linear(cmpz_logvalue v);

/* numerics */
CMPZ_API cmpz_status cmpz_log_gamma(double x, double* out);

/* exact engine; rel_tol in (0, 0.1] */
CMPZ_API cmpz_status cmpz_z_exact(double lambda, double nu, double rel_tol,
                                  cmpz_logvalue* value,
                                  cmpz_truncation* report);
CMPZ_API cmpz_status cmpz_log_pmf(double lambda, double nu, uint64_t j,
                                  double rel_tol, double* out);
CMPZ_API cmpz_status cmpz_raw_moment_exact(double lambda, double nu, int n,
                                           double rel_tol, double* out);

/* asymptotic engine */
CMPZ_API cmpz_status cmpz_coeff(int j, double nu, double* out);
CMPZ_API cmpz_status cmpz_asym_eval_create(double lambda, double nu, int order,
                                           cmpz_asym_eval** out);
CMPZ_API void cmpz_asym_eval_destroy(cmpz_asym_eval* eval);
CMPZ_API cmpz_logvalue cmpz_asym_eval_value(const cmpz_asym_eval* eval);
CMPZ_API int cmpz_asym_eval_order(const cmpz_asym_eval* eval);
CMPZ_API double cmpz_asym_eval_term(const cmpz_asym_eval* eval, int k);
CMPZ_API double cmpz_asym_eval_prefactor_log(const cmpz_asym_eval* eval);
CMPZ_API double cmpz_asym_eval_series_sum(const cmpz_asym_eval* eval);
CMPZ_API int cmpz_asym_eval_negative(const cmpz_asym_eval* eval);
CMPZ_API cmpz_status cmpz_percent_error(double lambda, double nu, int order,
                                        double rel_tol, double* out);
CMPZ_API cmpz_status cmpz_verify_inverse_factorial(double nu, double t, int terms,
                                                   double* out);

/* statistics; rel_tol is ignored for CMPZ_ASYMPTOTIC */
CMPZ_API cmpz_status cmpz_statistic_value(double lambda, double nu,
                                          cmpz_statistic which,
                                          cmpz_provenance method,
                                          double rel_tol, double* out);
CMPZ_API cmpz_status cmpz_raw_moment_asym(double lambda, double nu, int n,
                                          double* out);
CMPZ_API cmpz_status cmpz_bell_partial(int n, int k, const double* x,
                                       size_t len, double* out);

CMPZ_API cmpz_status cmpz_cumulants(double lambda, double nu, int n_max,
                                    cmpz_provenance method, double rel_tol,
                                    cmpz_cumulant_set** out);
CMPZ_API void cmpz_cumulant_set_destroy(cmpz_cumulant_set* set);
CMPZ_API size_t cmpz_cumulant_set_size(const cmpz_cumulant_set* set);
/* order is 1-based: kappa_order */
CMPZ_API double cmpz_cumulant_set_value(const cmpz_cumulant_set* set, int order);
CMPZ_API cmpz_provenance cmpz_cumulant_set_provenance(const cmpz_cumulant_set* set);

/* exact: raw and central moments from the series;
 * asymptotic: raw moments from the expansion, no central moments */
CMPZ_API cmpz_status cmpz_moments(double lambda, double nu, int n_max,
                                  cmpz_provenance method, double rel_tol,
                                  cmpz_moment_set** out);
CMPZ_API cmpz_status cmpz_moments_from_cumulants(const cmpz_cumulant_set* set,
                                                 cmpz_moment_set** out);
CMPZ_API void cmpz_moment_set_destroy(cmpz_moment_set* set);
CMPZ_API size_t cmpz_moment_set_size(const cmpz_moment_set* set);
CMPZ_API double cmpz_moment_set_raw(const cmpz_moment_set* set, int order);
CMPZ_API int cmpz_moment_set_has_central(const cmpz_moment_set* set);
CMPZ_API double cmpz_moment_set_central(const cmpz_moment_set* set, int order);
CMPZ_API cmpz_provenance cmpz_moment_set_provenance(const cmpz_moment_set* set);

/* error tables */
CMPZ_API cmpz_status cmpz_error_table_preset(const char* name, double rel_tol,
                                             cmpz_error_table** out);
CMPZ_API cmpz_status cmpz_error_table_custom(const double* lambdas, size_t n_lambda,
                                             const double* nus, size_t n_nu,
                                             const int* orders, size_t n_orders,
                                             double rel_tol,
                                             cmpz_error_table** out);
CMPZ_API cmpz_status cmpz_error_table_parse_csv(const char* text,
                                                cmpz_error_table** out);
CMPZ_API cmpz_status cmpz_error_table_read_csv(const char* path,
                                               cmpz_error_table** out);
CMPZ_API void cmpz_error_table_destroy(cmpz_error_table* table);
CMPZ_API size_t cmpz_error_table_cell_count(const cmpz_error_table* table);
CMPZ_API cmpz_status cmpz_error_table_cell(const cmpz_error_table* table,
                                           size_t index, double* lambda,
                                           double* nu, int* order,
                                           double* value, int* overflow);
CMPZ_API cmpz_status cmpz_error_table_to_csv(const cmpz_error_table* table,
                                             int raw, char** out);
CMPZ_API cmpz_status cmpz_error_table_write_csv(const cmpz_error_table* table,
                                                const char* path, int raw);
CMPZ_API cmpz_status cmpz_error_table_render(const cmpz_error_table* table,
                                             char** out);
CMPZ_API cmpz_status cmpz_format_cell(double value, char** out);

/* verification suites: "coeffs", "limit", "special-cases" */
CMPZ_API cmpz_status cmpz_verify_run(const char* suite, cmpz_report** out);
CMPZ_API void cmpz_report_destroy(cmpz_report* report);
CMPZ_API size_t cmpz_report_size(const cmpz_report* report);
CMPZ_API const char* cmpz_report_name(const cmpz_report* report, size_t i);
CMPZ_API int cmpz_report_passed(const cmpz_report* report, size_t i);
CMPZ_API const char* cmpz_report_detail(const cmpz_report* report, size_t i);
CMPZ_API int cmpz_report_all_passed(const cmpz_report* report);

#ifdef __cplusplus
}
#endif

#endif /* CMPZ_H */
