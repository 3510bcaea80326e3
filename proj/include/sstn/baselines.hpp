#ifndef SSTN_BASELINES_HPP
#define SSTN_BASELINES_HPP

#include "sstn/calibration_table.hpp"
#include "sstn/config.hpp"
#include "sstn/sample.hpp"
#include "sstn/types.hpp"

namespace sstn {

/// The five comparison tests.
enum class BaselineKind {
  ShapiroWilk,
  AndersonDarling,
  JarqueBera,
  Lilliefors,
  DAgostinoPearson,
};

struct BaselineResult {
  Scalar statistic = 0;
  Scalar p = 1;
};

/// Shapiro-Wilk W with Royston's coefficient approximation and normalizing
/// p-value transformation.  Requires 3 <= n <= 5000.
BaselineResult shapiro_wilk(const Sample& sample);

/// Anderson-Darling A^2 against the normal CDF with estimated mean and
/// variance, small-sample corrected p-value.  Requires n >= 8.
BaselineResult anderson_darling(const Sample& sample);

/// Jarque-Bera from 1/n central moments; p from the chi-squared(2) tail.
/// Requires n >= 8.
BaselineResult jarque_bera(const Sample& sample);

/// Kolmogorov-Smirnov distance to the normal CDF with estimated parameters.
/// Requires n >= 5.
Scalar lilliefors_statistic(const Sample& sample);

/// Lilliefors test; the p-value counts the null replicates in `table`
/// (kind Lilliefors, matching sample size) at or above the observed distance.
BaselineResult lilliefors(const Sample& sample, const CalibrationTable& table);

/// Null replicates of the Lilliefors statistic for sample size n, built with
/// the same substream scheme as the other calibrations.
CalibrationTable calibrate_lilliefors(int sample_size, const SstnConfig& config,
                                      int threads = 0);

/// D'Agostino-Pearson K^2 omnibus statistic from the standard skewness and
/// kurtosis z-transformations; p from the chi-squared(2) tail.
/// Requires n >= 20.
BaselineResult dagostino_pearson(const Sample& sample);

}  // namespace sstn

#endif
