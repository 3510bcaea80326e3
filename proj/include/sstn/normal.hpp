#ifndef SSTN_NORMAL_HPP
#define SSTN_NORMAL_HPP

#include <cmath>

namespace sstn {

/// Standard normal CDF.
inline double normal_cdf(double x) { return 0.5 * std::erfc(-x * M_SQRT1_2); }

/// Standard normal upper tail P(Z > x).
inline double normal_sf(double x) { return 0.5 * std::erfc(x * M_SQRT1_2); }

/// log of the standard normal CDF, stable far into the lower tail.
double log_normal_cdf(double x);

/// Standard normal quantile (inverse CDF), accurate to full double
/// precision over (0, 1).  Returns +-infinity at the endpoints.
double normal_quantile(double p);

/// Upper tail of the chi-squared distribution with 2 degrees of freedom.
inline double chi_squared2_sf(double x) { return std::exp(-0.5 * x); }

}  // namespace sstn

#endif
