// cmpz: command-line front end over the C API.
//
// exit codes: 0 ok, 1 verification failure, 2 invalid parameters or
// unwritable output, 3 resource limit.

#include <cmath>
#include <cstdio>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cmpz/cmpz.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitResource = 3;

struct Failure {
  cmpz_status status;
};

void check(cmpz_status s) {
  if (s != CMPZ_OK) throw Failure{s};
}

int report_failure(cmpz_status s) {
  std::fprintf(stderr, "cmpz: %s: %s\n", cmpz_status_string(s), cmpz_last_error());
  return s == CMPZ_ERR_RESOURCE_LIMIT ? kExitResource : kExitInvalid;
}

template <typename T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};
using AsymPtr = std::unique_ptr<cmpz_asym_eval, Deleter<cmpz_asym_eval, cmpz_asym_eval_destroy>>;
using CumulantPtr =
    std::unique_ptr<cmpz_cumulant_set, Deleter<cmpz_cumulant_set, cmpz_cumulant_set_destroy>>;
using MomentPtr =
    std::unique_ptr<cmpz_moment_set, Deleter<cmpz_moment_set, cmpz_moment_set_destroy>>;
using TablePtr =
    std::unique_ptr<cmpz_error_table, Deleter<cmpz_error_table, cmpz_error_table_destroy>>;
using ReportPtr = std::unique_ptr<cmpz_report, Deleter<cmpz_report, cmpz_report_destroy>>;

std::string take(char* s) {
  std::string out(s);
  cmpz_string_free(s);
  return out;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.16g", v);
  return buf;
}

// Z from its natural log; mantissa/exponent when outside double range.
std::string linear_from_log(double ln) {
  const double log10v = ln / std::log(10.0);
  if (std::abs(log10v) < 300.0) return num(std::exp(ln));
  const double e = std::floor(log10v);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15fe%+.0f", std::pow(10.0, log10v - e), e);
  return buf;
}

void field(const char* name, const std::string& value) {
  std::printf("%-16s%s\n", name, value.c_str());
}

struct EvalOptions {
  double lambda = 0.0;
  double nu = 0.0;
  std::string method = "exact";
  int order = 8;
  double rel_tol = 1e-14;
};

void run_eval(const EvalOptions& o) {
  if (o.method == "exact") {
    cmpz_logvalue z;
    cmpz_truncation rep;
    check(cmpz_z_exact(o.lambda, o.nu, o.rel_tol, &z, &rep));
    field("method", o.method);
    field("lambda", num(o.lambda));
    field("nu", num(o.nu));
    const double ln = z.log_magnitude + z.log_tail;
    field("Z", linear_from_log(ln));
    field("log10_Z", num(ln / std::log(10.0)));
    field("ln_Z", num(ln));
    field("rel_tol", num(o.rel_tol));
    field("terms_used", std::to_string(rep.terms_used));
    field("peak_index", std::to_string(rep.peak_index));
    field("tail_bound_ln", num(rep.tail_bound_log));
    return;
  }
  cmpz_asym_eval* raw = nullptr;
  check(cmpz_asym_eval_create(o.lambda, o.nu, o.order, &raw));
  AsymPtr eval(raw);
  const cmpz_logvalue z = cmpz_asym_eval_value(eval.get());
  field("method", o.method);
  field("lambda", num(o.lambda));
  field("nu", num(o.nu));
  field("order", std::to_string(cmpz_asym_eval_order(eval.get())));
  if (z.is_zero) {
    field("Z", "0");
  } else {
    const double ln = z.log_magnitude + z.log_tail;
    const std::string sign = cmpz_asym_eval_negative(eval.get()) ? "-" : "";
    field("Z", sign + linear_from_log(ln));
    field("log10_abs_Z", num(ln / std::log(10.0)));
    field("ln_abs_Z", num(ln));
  }
  field("terms_used", std::to_string(cmpz_asym_eval_order(eval.get())));
  field("prefactor_ln", num(cmpz_asym_eval_prefactor_log(eval.get())));
  field("series_sum", num(cmpz_asym_eval_series_sum(eval.get())));
  for (int k = 0; k < cmpz_asym_eval_order(eval.get()); ++k) {
    const std::string name = "term_" + std::to_string(k);
    field(name.c_str(), num(cmpz_asym_eval_term(eval.get(), k)));
  }
}

struct TableOptions {
  std::string preset = "table1";
  std::string csv;
  bool raw = false;
  double rel_tol = 1e-14;
  std::vector<double> lambdas;
  std::vector<double> nus;
  std::vector<int> orders = {1, 2, 3};
};

void run_table(const TableOptions& o) {
  cmpz_error_table* raw = nullptr;
  if (o.preset == "custom") {
    check(cmpz_error_table_custom(o.lambdas.data(), o.lambdas.size(), o.nus.data(),
                                  o.nus.size(), o.orders.data(), o.orders.size(),
                                  o.rel_tol, &raw));
  } else {
    check(cmpz_error_table_preset(o.preset.c_str(), o.rel_tol, &raw));
  }
  TablePtr table(raw);
  if (!o.csv.empty()) {
    check(cmpz_error_table_write_csv(table.get(), o.csv.c_str(), o.raw ? 1 : 0));
  }
  char* text = nullptr;
  if (o.raw && o.csv.empty()) {
    check(cmpz_error_table_to_csv(table.get(), 1, &text));
  } else {
    check(cmpz_error_table_render(table.get(), &text));
  }
  std::fputs(take(text).c_str(), stdout);
}

struct StatsOptions {
  double lambda = 0.0;
  double nu = 0.0;
  int n_max = 4;
  std::optional<std::string> method;
  double rel_tol = 1e-14;
};

struct StatRow {
  std::string name;
  std::optional<double> exact;
  std::optional<double> asym;
};

void run_stats(const StatsOptions& o) {
  const bool want_exact = !o.method || *o.method == "exact";
  const bool want_asym = !o.method || *o.method == "asym";
  // the expansion needs nu > 0
  const bool asym_available = o.nu > 0.0;
  if (cmpz_is_admissible(o.lambda, o.nu) == 0) {
    double dummy = 0.0;
    check(cmpz_statistic_value(o.lambda, o.nu, CMPZ_MEAN, CMPZ_EXACT, o.rel_tol, &dummy));
  }

  std::vector<StatRow> rows;
  const std::pair<const char*, cmpz_statistic> stats[] = {
      {"mean", CMPZ_MEAN},
      {"variance", CMPZ_VARIANCE},
      {"skewness", CMPZ_SKEWNESS},
      {"kurtosis", CMPZ_KURTOSIS},
  };
  for (const auto& [name, which] : stats) {
    StatRow row{name, {}, {}};
    double v = 0.0;
    if (want_exact) {
      check(cmpz_statistic_value(o.lambda, o.nu, which, CMPZ_EXACT, o.rel_tol, &v));
      row.exact = v;
    }
    if (want_asym && asym_available) {
      check(cmpz_statistic_value(o.lambda, o.nu, which, CMPZ_ASYMPTOTIC, o.rel_tol, &v));
      row.asym = v;
    }
    rows.push_back(row);
  }

  CumulantPtr k_exact, k_asym;
  MomentPtr m_exact, m_asym;
  cmpz_cumulant_set* kset = nullptr;
  cmpz_moment_set* mset = nullptr;
  if (want_exact) {
    check(cmpz_cumulants(o.lambda, o.nu, o.n_max, CMPZ_EXACT, o.rel_tol, &kset));
    k_exact.reset(kset);
    check(cmpz_moments(o.lambda, o.nu, o.n_max, CMPZ_EXACT, o.rel_tol, &mset));
    m_exact.reset(mset);
  }
  if (want_asym && asym_available) {
    check(cmpz_cumulants(o.lambda, o.nu, o.n_max, CMPZ_ASYMPTOTIC, o.rel_tol, &kset));
    k_asym.reset(kset);
    check(cmpz_moments(o.lambda, o.nu, o.n_max, CMPZ_ASYMPTOTIC, o.rel_tol, &mset));
    m_asym.reset(mset);
  }
  for (int n = 1; n <= o.n_max; ++n) {
    StatRow row{"kappa_" + std::to_string(n), {}, {}};
    if (k_exact) row.exact = cmpz_cumulant_set_value(k_exact.get(), n);
    if (k_asym) row.asym = cmpz_cumulant_set_value(k_asym.get(), n);
    rows.push_back(row);
  }
  for (int n = 1; n <= o.n_max; ++n) {
    StatRow row{"mu'_" + std::to_string(n), {}, {}};
    if (m_exact) row.exact = cmpz_moment_set_raw(m_exact.get(), n);
    if (m_asym) row.asym = cmpz_moment_set_raw(m_asym.get(), n);
    rows.push_back(row);
  }

  const std::string missing_asym = asym_available ? "-" : "unavailable";
  std::printf("%-12s%24s%24s%14s\n", "quantity", "exact", "asymptotic", "rel_gap");
  for (const StatRow& r : rows) {
    const std::string e = r.exact ? num(*r.exact) : "-";
    const std::string a = r.asym ? num(*r.asym) : missing_asym;
    std::string gap = "-";
    if (r.exact && r.asym) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3e", std::abs(*r.asym - *r.exact) / std::abs(*r.exact));
      gap = buf;
    }
    std::printf("%-12s%24s%24s%14s\n", r.name.c_str(), e.c_str(), a.c_str(), gap.c_str());
  }
}

int run_verify(const std::vector<std::string>& suites) {
  bool all = true;
  for (const std::string& suite : suites) {
    cmpz_report* raw = nullptr;
    check(cmpz_verify_run(suite.c_str(), &raw));
    ReportPtr report(raw);
    for (std::size_t i = 0; i < cmpz_report_size(report.get()); ++i) {
      const bool ok = cmpz_report_passed(report.get(), i) != 0;
      std::printf("%s %s %s\n", ok ? "PASS" : "FAIL", cmpz_report_name(report.get(), i),
                  cmpz_report_detail(report.get(), i));
    }
    all = all && cmpz_report_all_passed(report.get()) != 0;
  }
  return all ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conway-Maxwell-Poisson normalizing constant: exact series, "
               "asymptotic expansion, statistics and error tables"};
  app.require_subcommand(1);

  EvalOptions eval;
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate Z(lambda, nu)");
  eval_cmd->add_option("--lambda", eval.lambda, "rate parameter")->required();
  eval_cmd->add_option("--nu", eval.nu, "dispersion parameter")->required();
  eval_cmd->add_option("--method", eval.method, "exact or asym")
      ->check(CLI::IsMember({"exact", "asym"}))
      ->capture_default_str();
  eval_cmd->add_option("--order", eval.order, "expansion terms kept (asym)")
      ->check(CLI::Range(1, 8))
      ->capture_default_str();
  eval_cmd->add_option("--rel-tol", eval.rel_tol, "relative tolerance (exact)")
      ->capture_default_str();

  TableOptions table;
  CLI::App* table_cmd = app.add_subcommand("table", "percentage-error table");
  table_cmd->add_option("--preset", table.preset, "table1, table2 or custom")
      ->check(CLI::IsMember({"table1", "table2", "custom"}))
      ->capture_default_str();
  table_cmd->add_option("--csv", table.csv, "write the table as CSV to this path");
  table_cmd->add_flag("--raw", table.raw, "full-precision CSV values");
  table_cmd->add_option("--rel-tol", table.rel_tol, "relative tolerance of exact Z")
      ->capture_default_str();
  table_cmd->add_option("--lambdas", table.lambdas, "custom lambda grid")
      ->delimiter(',');
  table_cmd->add_option("--nus", table.nus, "custom nu grid")->delimiter(',');
  table_cmd->add_option("--orders", table.orders, "custom orders")
      ->delimiter(',')
      ->check(CLI::Range(1, 8));

  StatsOptions stats;
  std::string stats_method;
  CLI::App* stats_cmd = app.add_subcommand("stats", "summary statistics");
  stats_cmd->add_option("--lambda", stats.lambda, "rate parameter")->required();
  stats_cmd->add_option("--nu", stats.nu, "dispersion parameter")->required();
  CLI::Option* method_opt =
      stats_cmd->add_option("--method", stats_method, "exact or asym (default both)")
          ->check(CLI::IsMember({"exact", "asym"}));
  stats_cmd->add_option("--n-max", stats.n_max, "highest cumulant and moment order")
      ->check(CLI::Range(1, 6))
      ->capture_default_str();
  stats_cmd->add_option("--rel-tol", stats.rel_tol, "relative tolerance (exact)")
      ->capture_default_str();

  std::vector<std::string> suites;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run verification suites");
  verify_cmd->add_option("suite", suites, "coeffs, limit, special-cases (default all)")
      ->check(CLI::IsMember({"coeffs", "limit", "special-cases"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "cmpz: %s\n", e.what());
    return kExitInvalid;
  }

  try {
    if (*eval_cmd) {
      run_eval(eval);
    } else if (*table_cmd) {
      if (table.preset == "custom" && (table.lambdas.empty() || table.nus.empty())) {
        std::fprintf(stderr, "cmpz: --preset custom needs --lambdas and --nus\n");
        return kExitInvalid;
      }
      run_table(table);
    } else if (*stats_cmd) {
      if (method_opt->count() > 0) stats.method = stats_method;
      run_stats(stats);
    } else if (*verify_cmd) {
      if (suites.empty()) suites = {"coeffs", "limit", "special-cases"};
      return run_verify(suites);
    }
  } catch (const Failure& f) {
    return report_failure(f.status);
  }
  return kExitOk;
}
