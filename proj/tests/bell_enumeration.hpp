// Partial Bell polynomials by direct enumeration of the index sequences
// (j_1, ..., j_{n-k+1}) with sum j_i = k and sum i j_i = n.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

inline std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

/// Exact in integer arithmetic for small n and integer x.
inline std::int64_t bell_enumerated(int n, int k, const std::vector<std::int64_t>& x) {
  const int m = n - k + 1;
  std::vector<int> j(static_cast<std::size_t>(m), 0);
  std::int64_t total = 0;
  std::function<void(int, int, int)> walk = [&](int i, int blocks, int weight) {
    if (i > m) {
      if (blocks != k || weight != n) return;
      std::int64_t term = factorial(n);
      for (int t = 1; t <= m; ++t) {
        const int jt = j[static_cast<std::size_t>(t - 1)];
        term /= factorial(jt) * ipow(factorial(t), jt);
      }
      for (int t = 1; t <= m; ++t) term *= ipow(x[static_cast<std::size_t>(t - 1)], j[static_cast<std::size_t>(t - 1)]);
      total += term;
      return;
    }
    for (int c = 0; blocks + c <= k && weight + c * i <= n; ++c) {
      j[static_cast<std::size_t>(i - 1)] = c;
      walk(i + 1, blocks + c, weight + c * i);
    }
    j[static_cast<std::size_t>(i - 1)] = 0;
  };
  walk(1, 0, 0);
  return total;
}

}  // namespace oracle
