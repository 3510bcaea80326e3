#include "sstn/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sstn/errors.hpp"

namespace sstn {

Complex interp(const ComplexSeries& series, Scalar t) {
  const Grid& grid = series.grid;
  if (std::abs(t) > grid.bound()) {
    throw OutOfRange("interpolation argument " + std::to_string(t) +
                     " outside [-" + std::to_string(grid.bound()) + ", " +
                     std::to_string(grid.bound()) + "]");
  }
  const auto last = grid.size() - 2;
  auto idx = static_cast<Index>(std::floor((t - grid.point(0)) / grid.spacing()));
  idx = std::clamp<Index>(idx, 0, last);
  const Scalar lambda = (t - grid.point(idx)) / (grid.point(idx + 1) - grid.point(idx));
  // The (1-lambda)a + lambda b form reproduces both bracketing nodes exactly.
  return (1 - lambda) * series.values[idx] + lambda * series.values[idx + 1];
}

}  // namespace sstn
