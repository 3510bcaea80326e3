#ifndef SSTN_CALIBRATE_FIN_HPP
#define SSTN_CALIBRATE_FIN_HPP

#include "sstn/calibration_table.hpp"
#include "sstn/config.hpp"

namespace sstn {

/// Sample-size-specific Monte Carlo approximation of the null distribution
/// for n below the finite threshold: B standard-normal samples of size n run
/// through the linearized pipeline.  Moments and replicates come from the
/// same batch, so the standardized per-level replicates have sample mean 0
/// and sample standard deviation 1 by construction.  Deterministic given
/// (n, config.seed) regardless of thread count.
CalibrationTable calibrate_finite(int sample_size, const SstnConfig& config,
                                  int threads = 0);

}  // namespace sstn

#endif
