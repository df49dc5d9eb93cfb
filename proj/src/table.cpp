#include "cmpz/table.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "cmpz/asymptotic.hpp"
#include "cmpz/error.hpp"
#include "cmpz/exact.hpp"

namespace cmpz {

namespace {

constexpr std::string_view kCsvHeader = "lambda,nu,order,percent_error";

std::string shortest(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view s, std::size_t line) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    fail(ErrorCode::invalid_argument, "csv line " + std::to_string(line) +
                                          ": bad number '" + std::string(s) + "'");
  }
  return v;
}

std::string printf_fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::vector<double> odd_tenths() {
  std::vector<double> g;
  for (int k = 1; k <= 19; k += 2) g.push_back(k / 10.0);
  return g;
}

std::size_t index_in(std::unordered_map<double, std::size_t>& idx,
                     std::vector<double>& grid, double v) {
  auto [it, inserted] = idx.try_emplace(v, grid.size());
  if (inserted) grid.push_back(v);
  return it->second;
}

}  // namespace

const TableCell& ErrorTable::at(std::size_t li, std::size_t ni,
                                std::size_t oi) const {
  if (li >= lambda_grid.size() || ni >= nu_grid.size() || oi >= orders.size()) {
    fail(ErrorCode::index_out_of_range, "table index out of range");
  }
  return cells[(li * nu_grid.size() + ni) * orders.size() + oi];
}

ErrorTable make_error_table(const std::vector<double>& lambda_grid,
                            const std::vector<double>& nu_grid,
                            const std::vector<int>& orders, double rel_tol) {
  if (lambda_grid.empty() || nu_grid.empty() || orders.empty()) {
    fail(ErrorCode::invalid_argument, "table grids must be non-empty");
  }
  for (int o : orders) {
    if (o < 1 || o > kCoefficientCount) {
      fail(ErrorCode::index_out_of_range,
           "table orders must lie in [1, 8], got " + std::to_string(o));
    }
  }
  std::vector<CmpParams> pairs;
  for (double l : lambda_grid) {
    for (double n : nu_grid) {
      if (!(n > 0.0)) {
        fail(ErrorCode::domain, "table nu values must be > 0");
      }
      pairs.emplace_back(l, n);
    }
  }

  ErrorTable table;
  table.lambda_grid = lambda_grid;
  table.nu_grid = nu_grid;
  table.orders = orders;
  table.cells.resize(pairs.size() * orders.size());

  // Each (lambda, nu) pair fills its own slots; the layout does not depend
  // on which worker finishes first.
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t p = next++; p < pairs.size(); p = next++) {
      const ExactZ exact = z_exact(pairs[p], rel_tol);
      for (std::size_t oi = 0; oi < orders.size(); ++oi) {
        TableCell& cell = table.cells[p * orders.size() + oi];
        cell.lambda = pairs[p].lambda();
        cell.nu = pairs[p].nu();
        cell.order = orders[oi];
        try {
          cell.value = percent_error(z_asymptotic(pairs[p], orders[oi]), exact.value);
          cell.overflow = !std::isfinite(cell.value);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::overflow) throw;
          cell.overflow = true;
          cell.value = std::numeric_limits<double>::quiet_NaN();
        }
      }
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(
      std::thread::hardware_concurrency(), 1, pairs.size());
  std::vector<std::future<void>> running;
  for (std::size_t w = 0; w < workers; ++w) {
    running.push_back(std::async(std::launch::async, worker));
  }
  for (auto& f : running) f.get();
  return table;
}

ErrorTable preset_table(std::string_view name, double rel_tol) {
  if (name == "table1") {
    return make_error_table(odd_tenths(), odd_tenths(), {1, 2, 3}, rel_tol);
  }
  if (name == "table2") {
    return make_error_table({3, 4, 5, 6, 7, 8, 9, 10},
                            {2.5, 3, 3.5, 4, 4.5, 5}, {1, 2, 3}, rel_tol);
  }
  fail(ErrorCode::invalid_argument,
       "unknown preset '" + std::string(name) + "' (expected table1 or table2)");
}

std::string format_cell(double value, double clamp_threshold, bool overflow) {
  if (overflow || std::isnan(value)) return "ovf";
  const double mag = std::abs(value);
  if (mag > clamp_threshold) return value < 0 ? "-101" : "101";
  if (mag < 1.0) {
    std::string s = printf_fixed(value, 3);
    if (s != "1.000" && s != "-1.000") return s;
    return printf_fixed(value, 2);
  }
  const int exponent = static_cast<int>(std::floor(std::log10(mag)));
  int decimals = std::max(0, 2 - exponent);
  std::string s = printf_fixed(value, decimals);
  // rounding up into the next decade adds a fourth digit
  if (decimals > 0 && std::abs(std::stod(s)) >= std::pow(10.0, exponent + 1)) {
    s = printf_fixed(value, decimals - 1);
  }
  return s;
}

std::string to_csv(const ErrorTable& table, bool raw) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const TableCell& c : table.cells) {
    out += shortest(c.lambda);
    out += ',';
    out += shortest(c.nu);
    out += ',';
    out += std::to_string(c.order);
    out += ',';
    if (c.overflow) {
      out += "ovf";
    } else {
      out += raw ? shortest(c.value) : format_cell(c.value, table.clamp_threshold);
    }
    out += '\n';
  }
  return out;
}

ErrorTable parse_csv(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty() || lines.front() != kCsvHeader) {
    fail(ErrorCode::invalid_argument,
         "csv must start with the header " + std::string(kCsvHeader));
  }

  ErrorTable table;
  std::unordered_map<double, std::size_t> lambda_idx, nu_idx;
  std::unordered_map<int, std::size_t> order_idx;
  struct Placed {
    std::size_t li, ni, oi;
    TableCell cell;
  };
  std::vector<Placed> placed;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::string_view fields[4];
    std::string_view rest = lines[i];
    for (int f = 0; f < 4; ++f) {
      const std::size_t comma = rest.find(',');
      if ((f < 3) == (comma == std::string_view::npos)) {
        fail(ErrorCode::invalid_argument,
             "csv line " + std::to_string(i + 1) + ": expected 4 fields");
      }
      fields[f] = rest.substr(0, comma);
      if (comma != std::string_view::npos) rest.remove_prefix(comma + 1);
    }
    TableCell cell;
    cell.lambda = parse_double(fields[0], i + 1);
    cell.nu = parse_double(fields[1], i + 1);
    const double order = parse_double(fields[2], i + 1);
    cell.order = static_cast<int>(order);
    if (cell.order != order) {
      fail(ErrorCode::invalid_argument,
           "csv line " + std::to_string(i + 1) + ": order must be an integer");
    }
    if (fields[3] == "ovf") {
      cell.overflow = true;
      cell.value = std::numeric_limits<double>::quiet_NaN();
    } else {
      cell.value = parse_double(fields[3], i + 1);
    }
    const std::size_t li = index_in(lambda_idx, table.lambda_grid, cell.lambda);
    const std::size_t ni = index_in(nu_idx, table.nu_grid, cell.nu);
    auto [it, inserted] = order_idx.try_emplace(cell.order, table.orders.size());
    if (inserted) table.orders.push_back(cell.order);
    placed.push_back({li, ni, it->second, cell});
  }

  const std::size_t n_nu = table.nu_grid.size();
  const std::size_t n_ord = table.orders.size();
  const std::size_t expected = table.lambda_grid.size() * n_nu * n_ord;
  if (placed.size() != expected) {
    fail(ErrorCode::invalid_argument, "csv rows do not form a complete grid");
  }
  table.cells.resize(expected);
  std::vector<bool> seen(expected, false);
  for (const Placed& p : placed) {
    const std::size_t k = (p.li * n_nu + p.ni) * n_ord + p.oi;
    if (seen[k]) {
      fail(ErrorCode::invalid_argument, "csv contains a duplicate cell");
    }
    seen[k] = true;
    table.cells[k] = p.cell;
  }
  return table;
}

void write_csv_file(const ErrorTable& table, const std::string& path, bool raw) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::io, "cannot open '" + path + "' for writing");
  out << to_csv(table, raw);
  out.close();
  if (!out) fail(ErrorCode::io, "failed writing '" + path + "'");
}

ErrorTable read_csv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::io, "cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str());
}

std::string render(const ErrorTable& table) {
  constexpr std::size_t kLabel = 8, kOrder = 6, kCell = 10;
  std::string out = pad_right("lambda", kLabel) + pad_right("order", kOrder);
  for (double nu : table.nu_grid) out += pad_left("nu=" + shortest(nu), kCell);
  out += '\n';
  for (std::size_t li = 0; li < table.lambda_grid.size(); ++li) {
    for (std::size_t oi = 0; oi < table.orders.size(); ++oi) {
      out += pad_right(oi == 0 ? shortest(table.lambda_grid[li]) : "", kLabel);
      out += pad_right(std::to_string(table.orders[oi]), kOrder);
      for (std::size_t ni = 0; ni < table.nu_grid.size(); ++ni) {
        const TableCell& c = table.at(li, ni, oi);
        out += pad_left(format_cell(c.value, table.clamp_threshold, c.overflow), kCell);
      }
      out += '\n';
    }
  }
  return out;
}

}  // namespace cmpz
