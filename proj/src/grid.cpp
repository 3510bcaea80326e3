#include "sstn/grid.hpp"

#include <string>

#include "sstn/errors.hpp"

namespace sstn {

Grid make_grid(double bound, int size) {
  if (size < 2) {
    throw InvalidConfig("grid size must be >= 2, got " + std::to_string(size));
  }
  if (!(bound > 0)) {
    throw InvalidConfig("grid bound must be positive, got " + std::to_string(bound));
  }
  Grid grid;
  grid.bound_ = bound;
  grid.spacing_ = 2 * bound / (size - 1);
  grid.points_.resize(size);
  // t_h = -T + 2(h-1)T/(H-1), evaluated through the signed integer offset
  // 2h - H - 1 so that negation is exact: the grid is bitwise symmetric and
  // hits the endpoints +-T exactly.
  for (int h = 0; h < size; ++h) {
    const double offset = static_cast<double>(2 * h - (size - 1)) / (size - 1);
    grid.points_[h] = offset * bound;
  }
  return grid;
}

}  // namespace sstn
