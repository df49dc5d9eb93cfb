#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace cmpz {

struct TableCell {
  double lambda = 0.0;
  double nu = 0.0;
  int order = 0;
  double value = 0.0;  // signed percentage error
  bool overflow = false;
};

/// Percentage errors of the asymptotic expansion over a (lambda, nu, order)
/// grid. Cells are stored lambda-major, then nu, then order.
struct ErrorTable {
  std::vector<double> lambda_grid;
  std::vector<double> nu_grid;
  std::vector<int> orders;
  std::vector<TableCell> cells;
  double clamp_threshold = 100.0;

  const TableCell& at(std::size_t li, std::size_t ni, std::size_t oi) const;
};

ErrorTable make_error_table(const std::vector<double>& lambda_grid,
                            const std::vector<double>& nu_grid,
                            const std::vector<int>& orders, double rel_tol);

/// "table1": lambda, nu in {0.1, 0.3, ..., 1.9}; "table2": lambda in {3..10},
/// nu in {2.5, 3, ..., 5}. Orders {1, 2, 3} for both.
ErrorTable preset_table(std::string_view name, double rel_tol);

/// 3 significant figures (3 decimals below 1), +-101 past the threshold.
std::string format_cell(double value, double clamp_threshold = 100.0,
                        bool overflow = false);

/// Header lambda,nu,order,percent_error. Raw mode writes shortest
/// round-trip decimals; otherwise the display strings.
std::string to_csv(const ErrorTable& table, bool raw);
ErrorTable parse_csv(std::string_view text);

void write_csv_file(const ErrorTable& table, const std::string& path, bool raw);
ErrorTable read_csv_file(const std::string& path);

/// Fixed-width text table: one row per (lambda, order), one column per nu.
std::string render(const ErrorTable& table);

}  // namespace cmpz
