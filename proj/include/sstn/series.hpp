#ifndef SSTN_SERIES_HPP
#define SSTN_SERIES_HPP

#include <utility>

#include "sstn/grid.hpp"
#include "sstn/types.hpp"

namespace sstn {

/// Complex values attached to the nodes of a grid.
struct ComplexSeries {
  Grid grid;
  ComplexVector values;

  ComplexSeries() = default;
  ComplexSeries(Grid g, ComplexVector v) : grid(std::move(g)), values(std::move(v)) {}
};

/// Piecewise-linear interpolation between the bracketing grid nodes.
/// Reproduces node values exactly.  Throws OutOfRange when |t| exceeds the
/// grid bound; scaled arguments t/sqrt(m) with m >= 1 never do.
Complex interp(const ComplexSeries& series, Scalar t);

/// Callable view of a series for code that consumes interpolants.
class GridInterpolant {
 public:
  explicit GridInterpolant(const ComplexSeries& series) : series_(&series) {}
  Complex operator()(Scalar t) const { return interp(*series_, t); }

 private:
  const ComplexSeries* series_;
};

}  // namespace sstn

#endif
