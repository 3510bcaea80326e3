#ifndef SSTN_GRID_HPP
#define SSTN_GRID_HPP

#include "sstn/types.hpp"

namespace sstn {

/// Equidistant symmetric evaluation grid t_1, ..., t_H on [-T, T].
/// Nodes satisfy t_h = -t_{H+1-h} bitwise and t_1 = -T, t_H = T exactly.
class Grid {
 public:
  Grid() = default;

  double bound() const { return bound_; }
  Index size() const { return points_.size(); }
  const Vector& points() const { return points_; }
  Scalar point(Index h) const { return points_[h]; }

  /// Node spacing 2T/(H-1).
  Scalar spacing() const { return spacing_; }

  friend Grid make_grid(double bound, int size);

 private:
  double bound_ = 0;
  Scalar spacing_ = 0;
  Vector points_;
};

/// Builds the grid; throws InvalidConfig for size < 2 or bound <= 0.
Grid make_grid(double bound, int size);

}  // namespace sstn

#endif
