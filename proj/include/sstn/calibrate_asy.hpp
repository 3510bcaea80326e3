#ifndef SSTN_CALIBRATE_ASY_HPP
#define SSTN_CALIBRATE_ASY_HPP

#include "sstn/calibration_table.hpp"
#include "sstn/config.hpp"
#include "sstn/deviation.hpp"
#include "sstn/grid.hpp"
#include "sstn/rng.hpp"
#include "sstn/series.hpp"
#include "sstn/types.hpp"

namespace sstn {

/// Covariance of the discretized Gaussian limit vector
/// (G1(t_1..t_H), G2(t_1..t_H), Y1, Y2) under the standard normal law.
struct LimitCovariance {
  Matrix matrix;

  Index dim() const { return matrix.rows(); }
};

/// Assembles the (2H+2)-dimensional block covariance:
///   (S11)_{hl} = (psi0(t_h-t_l) + psi0(t_h+t_l) - 2 psi0(t_h) psi0(t_l)) / 2
///   (S22)_{hl} = (psi0(t_h-t_l) - psi0(t_h+t_l)) / 2
///   Cov(G2(t_h), Y1) = t_h psi0(t_h),  Cov(G1(t_h), Y2) = -t_h^2 psi0(t_h)/2
///   Var(Y1) = 1, Var(Y2) = 1/2; every other cross block is zero.
LimitCovariance build_covariance(const Grid& grid);

/// Draws centered Gaussian vectors with the limit covariance.  The matrix is
/// factored once by symmetric eigendecomposition; eigenvalues in
/// [-tolerance * lambda_max, 0) are clamped to zero (the matrix is positive
/// semidefinite in exact arithmetic but numerically near-singular).  A more
/// negative eigenvalue throws FactorizationFailure.
class LimitProcessSampler {
 public:
  explicit LimitProcessSampler(const LimitCovariance& covariance,
                               Scalar clamp_tolerance = 1e-8);

  /// One draw of (G1, G2, Y1, Y2); deterministic given the engine state.
  Vector sample(Rng& rng) const;

  Index dim() const { return transform_.rows(); }

  /// The factor A with A A^T equal to the clamped covariance.
  const Matrix& transform() const { return transform_; }

 private:
  Matrix transform_;
};

/// Combines a draw with layout (G1(t_1..t_H), G2(t_1..t_H), Y1, Y2) into the
/// complex limit process
///   G0(t_h) = G1(t_h) + t_h^2 psi0(t_h) Y2 + i (G2(t_h) - t_h psi0(t_h) Y1).
/// Throws LengthMismatch unless the vector has length 2H+2.
ComplexSeries assemble_g0(const Vector& gvec, const Grid& grid);

/// One realization of the limit discrepancies Q_1..Q_M: draw G0, interpolate,
/// transform, integrate.  Shares the series pipeline with the finite-sample
/// path.
DiscrepancyVector simulate_q_limit(const LimitProcessSampler& sampler,
                                   const Grid& grid, const SstnConfig& config,
                                   Rng& rng);

/// Monte Carlo approximation of the asymptotic null distribution.  Batch one
/// (B draws) estimates the per-level means and standard deviations; an
/// independent batch two produces the standardized max-statistics that form
/// the replicate set.  Deterministic given config.seed regardless of thread
/// count.
CalibrationTable calibrate_asymptotic(const SstnConfig& config, int threads = 0);

}  // namespace sstn

#endif
