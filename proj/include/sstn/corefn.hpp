#ifndef SSTN_COREFN_HPP
#define SSTN_COREFN_HPP

#include <cmath>

#include "sstn/grid.hpp"
#include "sstn/sample.hpp"
#include "sstn/series.hpp"
#include "sstn/types.hpp"

namespace sstn {

/// Empirical characteristic function (1/n) sum_k exp(i t x_k).
Complex ecf(const Sample& sample, Scalar t);

/// Standardized empirical characteristic function
/// exp(-i t mean/sd) * ecf(t/sd), evaluated on the standardized values so
/// that location and scale drop out of the arithmetic as far as rounding
/// allows.  Throws DegenerateSample when sd == 0.
Complex standardized_ecf(const Sample& sample, Scalar t);

/// Standardized ECF evaluated at every grid node.
ComplexSeries standardized_ecf_on_grid(const Sample& sample, const Grid& grid);

/// Characteristic function of the standard normal law, exp(-t^2/2).
inline Scalar psi0(Scalar t) { return std::exp(-0.5 * t * t); }

/// Gaussian weight exp(-beta t^2), beta > 0.
inline Scalar weight(Scalar t, Scalar beta) { return std::exp(-beta * t * t); }

/// Riemann sum over all H nodes times the spacing.  This deliberately sums
/// every node (endpoints at full weight); the identical convention is applied
/// to calibration replicates and observed data.  Throws LengthMismatch.
Scalar riemann(const Vector& values, const Grid& grid);

}  // namespace sstn

#endif
