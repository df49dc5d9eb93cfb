#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <thread>
#include <vector>

#include "cmpz/cmpz.h"
#include "doctest.h"

namespace {
std::string take(char* s) {
  std::string out(s);
  cmpz_string_free(s);
  return out;
}
}  // namespace

TEST_CASE("status strings and last error") {
  CHECK(std::string(cmpz_status_string(CMPZ_OK)) == "ok");
  CHECK(std::string(cmpz_status_string(CMPZ_ERR_RESOURCE_LIMIT)) == "resource limit");
  CHECK(std::string(cmpz_version()) == "1.0.0");
  cmpz_logvalue z;
  CHECK(cmpz_z_exact(1.5, 0.0, 1e-14, &z, nullptr) == CMPZ_ERR_INADMISSIBLE);
  CHECK(std::string(cmpz_last_error()).find("inadmissible") != std::string::npos);
  CHECK(cmpz_z_exact(1.0, 1.0, 1e-14, &z, nullptr) == CMPZ_OK);
  CHECK(std::string(cmpz_last_error()).empty());
  CHECK(cmpz_z_exact(1.0, 1.0, 1e-14, nullptr, nullptr) == CMPZ_ERR_INVALID_ARGUMENT);
}

TEST_CASE("last error is per thread") {
  cmpz_logvalue z;
  CHECK(cmpz_z_exact(2.0, 0.01, 1e-14, &z, nullptr) == CMPZ_ERR_RESOURCE_LIMIT);
  std::string other;
  std::thread t([&] {
    double v;
    cmpz_log_gamma(2.0, &v);
    other = cmpz_last_error();
  });
  t.join();
  CHECK(other.empty());
  CHECK(std::string(cmpz_last_error()).find("10000000") != std::string::npos);
}

TEST_CASE("exact engine through the C API") {
  cmpz_logvalue z;
  cmpz_truncation rep;
  REQUIRE(cmpz_z_exact(1.9, 0.1, 1e-15, &z, &rep) == CMPZ_OK);
  CHECK(std::abs(cmpz_logvalue_to_linear(z) / 5.49743309747796e28 - 1) <= 5e-14);
  CHECK(rep.terms_used > rep.peak_index);
  double v = 0;
  CHECK(cmpz_log_pmf(1, 1, 0, 1e-14, &v) == CMPZ_OK);
  CHECK(v == doctest::Approx(-1.0));
  CHECK(cmpz_raw_moment_exact(1, 1, 2, 1e-14, &v) == CMPZ_OK);
  CHECK(v == doctest::Approx(2.0));
  CHECK(cmpz_log_gamma(-1.0, &v) == CMPZ_ERR_DOMAIN);
  CHECK(cmpz_is_admissible(0.5, 0.0) == 1);
  CHECK(cmpz_is_admissible(1.5, 0.0) == 0);
}

TEST_CASE("asymptotic handle") {
  cmpz_asym_eval* e = nullptr;
  REQUIRE(cmpz_asym_eval_create(1.9, 0.1, 8, &e) == CMPZ_OK);
  CHECK(cmpz_asym_eval_order(e) == 8);
  CHECK(cmpz_asym_eval_term(e, 0) == 1.0);
  CHECK(std::isnan(cmpz_asym_eval_term(e, 8)));
  CHECK(cmpz_asym_eval_negative(e) == 0);
  cmpz_asym_eval_destroy(e);
  CHECK(cmpz_asym_eval_create(1.0, 1.0, 9, &e) == CMPZ_ERR_INDEX);
  CHECK(cmpz_asym_eval_create(0.5, 0.0, 1, &e) == CMPZ_ERR_DOMAIN);
  CHECK(cmpz_asym_eval_create(1e300, 0.01, 1, &e) == CMPZ_ERR_OVERFLOW);
  cmpz_asym_eval_destroy(nullptr);

  double pe = 0;
  REQUIRE(cmpz_percent_error(1.9, 0.1, 8, 1e-15, &pe) == CMPZ_OK);
  CHECK(std::abs(pe) / 100 == doctest::Approx(1.59e-13).epsilon(0.02));
  double c = 0;
  CHECK(cmpz_coeff(2, 2.0, &c) == CMPZ_OK);
  CHECK(c == 0.0703125);
  CHECK(cmpz_verify_inverse_factorial(1.0, 10.0, 1, &c) == CMPZ_OK);
  CHECK(c <= 1e-12);
}

TEST_CASE("statistics handles") {
  double v = 0;
  CHECK(cmpz_statistic_value(4, 1, CMPZ_VARIANCE, CMPZ_EXACT, 1e-15, &v) == CMPZ_OK);
  CHECK(v == doctest::Approx(4.0));
  CHECK(cmpz_statistic_value(4, 1, CMPZ_SKEWNESS, CMPZ_ASYMPTOTIC, 1e-15, &v) == CMPZ_OK);
  CHECK(v == doctest::Approx(0.5));
  CHECK(cmpz_statistic_value(0.5, 0, CMPZ_MEAN, CMPZ_ASYMPTOTIC, 1e-15, &v) == CMPZ_ERR_DOMAIN);
  CHECK(cmpz_raw_moment_asym(10, 2, 2, &v) == CMPZ_OK);
  CHECK(v == doctest::Approx(10.0));

  cmpz_cumulant_set* k = nullptr;
  REQUIRE(cmpz_cumulants(1, 1, 4, CMPZ_EXACT, 1e-15, &k) == CMPZ_OK);
  CHECK(cmpz_cumulant_set_size(k) == 4);
  CHECK(cmpz_cumulant_set_provenance(k) == CMPZ_EXACT);
  CHECK(cmpz_cumulant_set_value(k, 4) == doctest::Approx(1.0));
  CHECK(std::isnan(cmpz_cumulant_set_value(k, 5)));
  cmpz_moment_set* m = nullptr;
  REQUIRE(cmpz_moments_from_cumulants(k, &m) == CMPZ_OK);
  CHECK(cmpz_moment_set_raw(m, 3) == doctest::Approx(5.0));
  CHECK(cmpz_moment_set_has_central(m) == 1);
  CHECK(cmpz_moment_set_central(m, 2) == doctest::Approx(1.0));
  cmpz_moment_set_destroy(m);
  cmpz_cumulant_set_destroy(k);

  REQUIRE(cmpz_moments(10, 2, 3, CMPZ_ASYMPTOTIC, 1e-15, &m) == CMPZ_OK);
  CHECK(cmpz_moment_set_provenance(m) == CMPZ_ASYMPTOTIC);
  CHECK(cmpz_moment_set_has_central(m) == 0);
  CHECK(cmpz_moment_set_size(m) == 3);
  cmpz_moment_set_destroy(m);
  CHECK(cmpz_cumulants(1, 1, 7, CMPZ_EXACT, 1e-15, &k) == CMPZ_ERR_INVALID_ARGUMENT);

  const double x[] = {2, 3, 5};
  CHECK(cmpz_bell_partial(4, 2, x, 3, &v) == CMPZ_OK);
  CHECK(v == 67.0);
  CHECK(cmpz_bell_partial(2, 3, x, 3, &v) == CMPZ_ERR_INVALID_ARGUMENT);
}

TEST_CASE("error table handles") {
  cmpz_error_table* t = nullptr;
  REQUIRE(cmpz_error_table_preset("table2", 1e-14, &t) == CMPZ_OK);
  CHECK(cmpz_error_table_cell_count(t) == 144);
  double lambda, nu, value;
  int order, ovf;
  REQUIRE(cmpz_error_table_cell(t, 0, &lambda, &nu, &order, &value, &ovf) == CMPZ_OK);
  CHECK(lambda == 3.0);
  CHECK(nu == 2.5);
  CHECK(order == 1);
  CHECK(ovf == 0);
  CHECK(cmpz_error_table_cell(t, 144, &lambda, &nu, &order, &value, &ovf) == CMPZ_ERR_INDEX);

  char* csv = nullptr;
  REQUIRE(cmpz_error_table_to_csv(t, 1, &csv) == CMPZ_OK);
  const std::string raw = take(csv);
  char* shown = nullptr;
  REQUIRE(cmpz_error_table_render(t, &shown) == CMPZ_OK);
  const std::string display = take(shown);

  cmpz_error_table* back = nullptr;
  REQUIRE(cmpz_error_table_parse_csv(raw.c_str(), &back) == CMPZ_OK);
  REQUIRE(cmpz_error_table_render(back, &shown) == CMPZ_OK);
  CHECK(take(shown) == display);
  cmpz_error_table_destroy(back);

  CHECK(cmpz_error_table_write_csv(t, "/nonexistent-dir/t.csv", 1) == CMPZ_ERR_IO);
  CHECK(cmpz_error_table_preset("bogus", 1e-14, &back) == CMPZ_ERR_INVALID_ARGUMENT);
  cmpz_error_table_destroy(t);

  const double ls[] = {3, 4};
  const double ns[] = {2.5};
  const int os[] = {1, 2};
  REQUIRE(cmpz_error_table_custom(ls, 2, ns, 1, os, 2, 1e-14, &t) == CMPZ_OK);
  CHECK(cmpz_error_table_cell_count(t) == 4);
  cmpz_error_table_destroy(t);

  char* cell = nullptr;
  REQUIRE(cmpz_format_cell(-437.0, &cell) == CMPZ_OK);
  CHECK(take(cell) == "-101");
}

TEST_CASE("verify reports") {
  cmpz_report* r = nullptr;
  REQUIRE(cmpz_verify_run("special-cases", &r) == CMPZ_OK);
  CHECK(cmpz_report_size(r) == 3);
  CHECK(cmpz_report_all_passed(r) == 1);
  CHECK(std::string(cmpz_report_name(r, 0)).rfind("special.", 0) == 0);
  CHECK(std::string(cmpz_report_name(r, 9)).empty());
  cmpz_report_destroy(r);
  CHECK(cmpz_verify_run("unknown", &r) == CMPZ_ERR_INVALID_ARGUMENT);
}

TEST_CASE("concurrent calls") {
  std::vector<std::thread> pool;
  std::vector<double> results(8, 0.0);
  for (int i = 0; i < 8; ++i) {
    pool.emplace_back([&, i] {
      cmpz_logvalue z;
      if (cmpz_z_exact(1.0 + i, 1.0, 1e-14, &z, nullptr) == CMPZ_OK) {
        results[static_cast<std::size_t>(i)] = z.log_magnitude + z.log_tail;
      }
    });
  }
  for (auto& t : pool) t.join();
  for (int i = 0; i < 8; ++i) CHECK(results[static_cast<std::size_t>(i)] == doctest::Approx(1.0 + i).epsilon(1e-14));
}
