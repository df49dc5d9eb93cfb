#pragma once

// Extended-precision helpers shared by the engines; not part of the public
// surface.

namespace cmpz::detail {

/// ln Gamma(x) in long double, x > 0 (unchecked).
long double log_gamma_ext(long double x);

}  // namespace cmpz::detail
