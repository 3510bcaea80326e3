#ifndef SSTN_DEVIATION_HPP
#define SSTN_DEVIATION_HPP

#include <cmath>
#include <concepts>
#include <utility>

#include "sstn/config.hpp"
#include "sstn/corefn.hpp"
#include "sstn/errors.hpp"
#include "sstn/grid.hpp"
#include "sstn/sample.hpp"
#include "sstn/series.hpp"
#include "sstn/types.hpp"

namespace sstn {

/// Deviation process sqrt(n) (psi_hat_star(t_h) - psi0(t_h)) on the grid.
struct DeviationSeries {
  ComplexSeries series;
  Index sample_size = 0;
};

/// Linearized discrepancy measures Q_1, ..., Q_M (all nonnegative).
struct DiscrepancyVector {
  Vector q;

  Index levels() const { return q.size(); }
};

/// Evaluates the deviation process for a sample.  Throws DegenerateSample
/// when the sample is constant.
DeviationSeries deviation_process(const Sample& sample, const Grid& grid);

/// Transformed deviation at iteration level m, evaluated at every grid node:
///   (m+1) u(t/sqrt(m+1)) / psi0(t/sqrt(m+1)) - m u(t/sqrt(m)) / psi0(t/sqrt(m))
/// where u is any callable defined on [-T, T] (typically a GridInterpolant).
/// The scaled arguments stay inside the grid for every m >= 1.
template <std::invocable<Scalar> UTilde>
ComplexSeries transformed_deviation(UTilde&& u, int m, const Grid& grid) {
  if (m < 1) throw InvalidConfig("iteration level must be >= 1");
  const Scalar scale_hi = std::sqrt(static_cast<Scalar>(m) + 1);
  const Scalar scale_lo = std::sqrt(static_cast<Scalar>(m));
  ComplexVector values(grid.size());
  for (Index h = 0; h < grid.size(); ++h) {
    const Scalar t_hi = grid.point(h) / scale_hi;
    const Scalar t_lo = grid.point(h) / scale_lo;
    values[h] = static_cast<Scalar>(m + 1) * u(t_hi) / psi0(t_hi) -
                static_cast<Scalar>(m) * u(t_lo) / psi0(t_lo);
  }
  return {grid, std::move(values)};
}

/// Weighted squared L2 functional of a transformed deviation:
/// Riemann sum of weight(t) psi0(t)^2 |h(t)|^2 over the grid.
Scalar linearized_discrepancy(const ComplexSeries& h, Scalar beta);

/// Full linearized pipeline for any complex series on the grid: linear
/// interpolant, transformed deviations, weighted quadrature for
/// m = 1..max_level.  Observed samples, finite-sample calibration replicates
/// and the simulated limit process all run through this one function.
DiscrepancyVector discrepancies_from_series(const ComplexSeries& u, int max_level,
                                            Scalar beta);

/// Q_1..Q_M for a sample (deviation process composed with the pipeline).
DiscrepancyVector discrepancy_vector(const Sample& sample, const SstnConfig& config);

/// z^m by repeated multiplication; avoids the complex logarithm and its
/// branch cut when z circles the origin.
Complex complex_power(Complex z, int exponent);

/// Self-similarity transform of an arbitrary characteristic-function
/// evaluator: values (phi(t_h/sqrt(m)))^m at every grid node.
template <std::invocable<Scalar> CharFn>
ComplexSeries self_similarity_transform(CharFn&& phi, int m, const Grid& grid) {
  if (m < 1) throw InvalidConfig("iteration level must be >= 1");
  const Scalar scale = std::sqrt(static_cast<Scalar>(m));
  ComplexVector values(grid.size());
  for (Index h = 0; h < grid.size(); ++h) {
    values[h] = complex_power(phi(grid.point(h) / scale), m);
  }
  return {grid, std::move(values)};
}

namespace detail {
/// Direct (nonlinear) discrepancies from precomputed transform values:
/// column j-1 of `transforms` holds (phi(t_h/sqrt(j)))^j for j = 1..max+1.
Vector direct_discrepancies_from_transforms(
    const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>& transforms,
    const Grid& grid, Scalar beta);
}  // namespace detail

/// Direct discrepancies Delta_1..Delta_M of an arbitrary characteristic
/// function: Delta_m = integral of weight |S_{m+1} - S_m|^2 over the grid,
/// with S_m the self-similarity transform.  No sample-size factor.
template <std::invocable<Scalar> CharFn>
Vector direct_discrepancy_profile(CharFn&& phi, const SstnConfig& config) {
  const Grid grid = make_grid(config.bound, config.grid_size);
  Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic> transforms(
      grid.size(), config.max_level + 1);
  for (int level = 1; level <= config.max_level + 1; ++level) {
    const Scalar scale = std::sqrt(static_cast<Scalar>(level));
    for (Index h = 0; h < grid.size(); ++h) {
      transforms(h, level - 1) = complex_power(phi(grid.point(h) / scale), level);
    }
  }
  return detail::direct_discrepancies_from_transforms(transforms, grid, config.beta);
}

/// Direct-route discrepancies n Delta_1..n Delta_M for a sample, from the
/// nonlinear self-similarity transforms of the standardized ECF.  Validation
/// counterpart of discrepancy_vector: for normal data the two agree up to
/// terms vanishing in probability as n grows.
DiscrepancyVector direct_discrepancy(const Sample& sample, const SstnConfig& config);

}  // namespace sstn

#endif
