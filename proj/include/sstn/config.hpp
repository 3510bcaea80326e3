#ifndef SSTN_CONFIG_HPP
#define SSTN_CONFIG_HPP

#include <cstdint>

namespace sstn {

/// Tuning parameters of the self-similarity test.  The defaults are the
/// reference settings used throughout: M = 20 iteration levels, an H = 100
/// point grid on [-4, 4], Gaussian weight exponent beta = 2, B = 10,000
/// calibration replicates, and size-specific calibration below n = 100.
struct SstnConfig {
  int max_level = 20;        ///< M, number of iteration levels
  int grid_size = 100;       ///< H, number of grid nodes
  double bound = 4.0;        ///< T, grid covers [-T, T]
  double beta = 2.0;         ///< weight exponent in exp(-beta t^2)
  int replicates = 10000;    ///< B, Monte Carlo replicates per calibration
  int finite_threshold = 100;  ///< below this n, use size-specific calibration
  std::uint64_t seed = 1;

  void validate() const;
};

}  // namespace sstn

#endif
