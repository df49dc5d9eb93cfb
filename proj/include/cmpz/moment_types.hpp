#pragma once

#include <optional>
#include <vector>

namespace cmpz {

enum class Provenance { exact, asymptotic };

/// kappa_1..kappa_n; values[i] holds kappa_{i+1}.
struct CumulantSet {
  std::vector<double> values;
  Provenance provenance = Provenance::exact;
  /// Number of expansion terms retained; 0 for exact sets.
  int order_in_lambda = 0;

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t order) const { return values.at(order - 1); }
};

/// raw[i] holds mu'_{i+1}; central[i] holds mu_{i+1} (so central[0] == 0).
struct MomentSet {
  std::vector<double> raw;
  std::optional<std::vector<double>> central;
  Provenance provenance = Provenance::exact;
};

}  // namespace cmpz
