#include "sstn/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "sstn/decision.hpp"
#include "sstn/errors.hpp"
#include "sstn/normal.hpp"
#include "sstn/parallel.hpp"
#include "sstn/rng.hpp"

namespace sstn {

namespace {

void require_size(const Sample& sample, Index min, const char* test) {
  if (sample.size() < min) {
    throw UnsupportedSampleSize(std::string(test) + " requires n >= " +
                                std::to_string(min) + ", got n = " +
                                std::to_string(sample.size()));
  }
}

void require_spread(const Sample& sample, const char* test) {
  if (sample.sd() == 0) {
    throw DegenerateSample(std::string(test) + ": all observations identical");
  }
}

Vector sorted_values(const Sample& sample) {
  Vector x = sample.values();
  std::sort(x.begin(), x.end());
  return x;
}

/// Central moments with 1/n normalization.
struct Moments {
  Scalar m2, m3, m4;
};

Moments central_moments(const Sample& sample) {
  const Vector d = sample.values().array() - sample.mean();
  const Vector d2 = d.array().square();
  return {d2.mean(), (d2.array() * d.array()).mean(), d2.array().square().mean()};
}

template <int N>
Scalar poly(const double (&coef)[N], Scalar x) {
  Scalar value = coef[N - 1];
  for (int i = N - 2; i >= 0; --i) value = value * x + coef[i];
  return value;
}

}  // namespace

BaselineResult shapiro_wilk(const Sample& sample) {
  // Royston's AS R94 formulation (uncensored case, double precision).
  require_size(sample, 3, "Shapiro-Wilk");
  if (sample.size() > 5000) {
    throw UnsupportedSampleSize("Shapiro-Wilk coefficients are valid up to n = 5000");
  }
  require_spread(sample, "Shapiro-Wilk");

  static constexpr double kC1[6] = {0.0,      0.221157, -0.147981,
                                    -2.071190, 4.434685, -2.706056};
  static constexpr double kC2[6] = {0.0,      0.042981, -0.293762,
                                    -1.752461, 5.682633, -3.582633};
  static constexpr double kSmallMu[4] = {0.5440, -0.39978, 0.025054, -0.0006714};
  static constexpr double kSmallLogSigma[4] = {1.3822, -0.77857, 0.062767,
                                               -0.0020322};
  static constexpr double kLargeMu[4] = {-1.5861, -0.31082, -0.083751, 0.0038915};
  static constexpr double kLargeLogSigma[3] = {-0.4803, -0.082676, 0.0030302};

  const int n = static_cast<int>(sample.size());
  const int half = n / 2;

  // Expected normal order statistics for the lower half (all negative).
  Vector m(half);
  for (int i = 1; i <= half; ++i) {
    m[i - 1] = normal_quantile((i - 0.375) / (n + 0.25));
  }

  Vector coef(half);
  if (n == 3) {
    coef[0] = M_SQRT1_2;
  } else {
    const Scalar norm2 = 2 * m.squaredNorm();
    const Scalar norm = std::sqrt(norm2);
    const Scalar rsn = 1 / std::sqrt(static_cast<Scalar>(n));
    const Scalar a1 = poly(kC1, rsn) - m[0] / norm;
    int first_plain = 1;
    Scalar rescale;
    if (n > 5) {
      const Scalar a2 = poly(kC2, rsn) - m[1] / norm;
      rescale = std::sqrt((norm2 - 2 * m[0] * m[0] - 2 * m[1] * m[1]) /
                          (1 - 2 * a1 * a1 - 2 * a2 * a2));
      coef[0] = a1;
      coef[1] = a2;
      first_plain = 2;
    } else {
      rescale = std::sqrt((norm2 - 2 * m[0] * m[0]) / (1 - 2 * a1 * a1));
      coef[0] = a1;
    }
    for (int i = first_plain; i < half; ++i) coef[i] = -m[i] / rescale;
  }

  // W as the squared correlation between the ordered (range-scaled) sample
  // and the antisymmetric coefficient vector; w1 = 1 - W kept explicitly to
  // avoid cancellation for W near 1.
  const Vector x = sorted_values(sample);
  const Scalar range = x[n - 1] - x[0];
  Vector y = x / range;
  const Scalar y_mean = y.mean();
  Scalar ssx = 0, ssa = 0, sax = 0;
  for (int i = 0; i < n; ++i) {
    Scalar a_i = 0;
    if (i < half) {
      a_i = -coef[i];
    } else if (i >= n - half) {
      a_i = coef[n - 1 - i];
    }
    const Scalar dy = y[i] - y_mean;
    ssx += dy * dy;
    ssa += a_i * a_i;
    sax += a_i * dy;
  }
  const Scalar ssassx = std::sqrt(ssa * ssx);
  const Scalar w1 = (ssassx - sax) * (ssassx + sax) / (ssa * ssx);
  const Scalar w = 1 - w1;

  Scalar p;
  if (n == 3) {
    constexpr Scalar kSixOverPi = 1.90985931710274;
    constexpr Scalar kAsinSqrt34 = 1.04719755119660;  // asin(sqrt(3/4))
    p = std::clamp<Scalar>(kSixOverPi * (std::asin(std::sqrt(w)) - kAsinSqrt34),
                           0.0, 1.0);
  } else if (n <= 11) {
    const Scalar gamma = -2.273 + 0.459 * n;
    const Scalar y_log = std::log(w1);
    if (y_log >= gamma) {
      p = 1e-99;
    } else {
      const Scalar transformed = -std::log(gamma - y_log);
      const Scalar mu = poly(kSmallMu, static_cast<Scalar>(n));
      const Scalar sigma = std::exp(poly(kSmallLogSigma, static_cast<Scalar>(n)));
      p = normal_sf((transformed - mu) / sigma);
    }
  } else {
    const Scalar log_n = std::log(static_cast<Scalar>(n));
    const Scalar mu = poly(kLargeMu, log_n);
    const Scalar sigma = std::exp(poly(kLargeLogSigma, log_n));
    p = normal_sf((std::log(w1) - mu) / sigma);
  }
  return {w, p};
}

BaselineResult anderson_darling(const Sample& sample) {
  require_size(sample, 8, "Anderson-Darling");
  require_spread(sample, "Anderson-Darling");

  const Index n = sample.size();
  const Vector x = sorted_values(sample);
  const Scalar sd =
      std::sqrt((x.array() - sample.mean()).square().sum() / (n - 1));

  Scalar sum = 0;
  for (Index i = 0; i < n; ++i) {
    const Scalar z_low = (x[i] - sample.mean()) / sd;
    const Scalar z_high = (x[n - 1 - i] - sample.mean()) / sd;
    sum += (2 * static_cast<Scalar>(i) + 1) *
           (log_normal_cdf(z_low) + log_normal_cdf(-z_high));
  }
  const Scalar a2 = -static_cast<Scalar>(n) - sum / static_cast<Scalar>(n);

  // Small-sample correction and the standard piecewise-exponential tail fit
  // for the estimated-parameters case.
  const Scalar nn = static_cast<Scalar>(n);
  const Scalar corrected = a2 * (1 + 0.75 / nn + 2.25 / (nn * nn));
  Scalar p;
  if (corrected >= 0.6) {
    p = std::exp(1.2937 - 5.709 * corrected + 0.0186 * corrected * corrected);
  } else if (corrected >= 0.34) {
    p = std::exp(0.9177 - 4.279 * corrected - 1.38 * corrected * corrected);
  } else if (corrected > 0.2) {
    p = 1 - std::exp(-8.318 + 42.796 * corrected - 59.938 * corrected * corrected);
  } else {
    p = 1 - std::exp(-13.436 + 101.14 * corrected - 223.73 * corrected * corrected);
  }
  return {a2, std::clamp<Scalar>(p, 0.0, 1.0)};
}

BaselineResult jarque_bera(const Sample& sample) {
  require_size(sample, 8, "Jarque-Bera");
  require_spread(sample, "Jarque-Bera");

  const auto [m2, m3, m4] = central_moments(sample);
  const Scalar skew = m3 / std::pow(m2, 1.5);
  const Scalar kurt = m4 / (m2 * m2);
  const Scalar n = static_cast<Scalar>(sample.size());
  const Scalar jb = n / 6 * (skew * skew + 0.25 * (kurt - 3) * (kurt - 3));
  return {jb, chi_squared2_sf(jb)};
}

Scalar lilliefors_statistic(const Sample& sample) {
  require_size(sample, 5, "Lilliefors");
  require_spread(sample, "Lilliefors");

  const Index n = sample.size();
  const Vector x = sorted_values(sample);
  const Scalar sd =
      std::sqrt((x.array() - sample.mean()).square().sum() / (n - 1));
  Scalar d = 0;
  for (Index i = 0; i < n; ++i) {
    const Scalar cdf = normal_cdf((x[i] - sample.mean()) / sd);
    const Scalar below = cdf - static_cast<Scalar>(i) / n;
    const Scalar above = static_cast<Scalar>(i + 1) / n - cdf;
    d = std::max({d, below, above});
  }
  return d;
}

BaselineResult lilliefors(const Sample& sample, const CalibrationTable& table) {
  if (table.key.kind != TableKind::Lilliefors ||
      table.key.sample_size != sample.size()) {
    throw DimensionMismatch("Lilliefors table does not match the sample size");
  }
  const Scalar d = lilliefors_statistic(sample);
  return {d, p_value(d, table)};
}

CalibrationTable calibrate_lilliefors(int sample_size, const SstnConfig& config,
                                      int threads) {
  config.validate();
  if (sample_size < 5) {
    throw InvalidConfig("Lilliefors calibration requires n >= 5");
  }
  if (config.replicates < 2) {
    throw InvalidConfig("calibration needs at least 2 replicates");
  }
  Vector replicates(config.replicates);
  parallel_for(
      config.replicates,
      [&](Index b) {
        Rng rng = substream(config.seed,
                            {stream::kLillieforsCalibration,
                             static_cast<std::uint64_t>(sample_size),
                             static_cast<std::uint64_t>(b)});
        std::normal_distribution<Scalar> normal;
        Vector draws(sample_size);
        for (Index k = 0; k < draws.size(); ++k) draws[k] = normal(rng);
        replicates[b] = lilliefors_statistic(Sample(std::move(draws)));
      },
      threads);
  std::sort(replicates.begin(), replicates.end());

  CalibrationTable table{TableKey::lilliefors(sample_size, config),
                         Vector::Zero(1), Vector::Ones(1), std::move(replicates)};
  validate(table);
  return table;
}

BaselineResult dagostino_pearson(const Sample& sample) {
  require_size(sample, 20, "D'Agostino-Pearson");
  require_spread(sample, "D'Agostino-Pearson");

  const Scalar n = static_cast<Scalar>(sample.size());
  const auto [m2, m3, m4] = central_moments(sample);

  // Skewness z-transformation.
  const Scalar b1 = m3 / std::pow(m2, 1.5);
  const Scalar y = b1 * std::sqrt((n + 1) * (n + 3) / (6 * (n - 2)));
  const Scalar beta2 = 3 * (n * n + 27 * n - 70) * (n + 1) * (n + 3) /
                       ((n - 2) * (n + 5) * (n + 7) * (n + 9));
  const Scalar w2 = -1 + std::sqrt(2 * (beta2 - 1));
  const Scalar delta = 1 / std::sqrt(0.5 * std::log(w2));
  const Scalar alpha = std::sqrt(2 / (w2 - 1));
  const Scalar y_scaled = y == 0 ? 1e-300 : y / alpha;
  const Scalar z1 =
      delta * std::log(y_scaled + std::sqrt(y_scaled * y_scaled + 1));

  // Kurtosis z-transformation.
  const Scalar b2 = m4 / (m2 * m2);
  const Scalar mean_b2 = 3 * (n - 1) / (n + 1);
  const Scalar var_b2 =
      24 * n * (n - 2) * (n - 3) / ((n + 1) * (n + 1) * (n + 3) * (n + 5));
  const Scalar standardized = (b2 - mean_b2) / std::sqrt(var_b2);
  const Scalar root_beta1 = 6 * (n * n - 5 * n + 2) / ((n + 7) * (n + 9)) *
                            std::sqrt(6 * (n + 3) * (n + 5) /
                                      (n * (n - 2) * (n - 3)));
  const Scalar a = 6 + 8 / root_beta1 *
                           (2 / root_beta1 +
                            std::sqrt(1 + 4 / (root_beta1 * root_beta1)));
  const Scalar denom = 1 + standardized * std::sqrt(2 / (a - 4));
  const Scalar ratio = (1 - 2 / a) / std::abs(denom);
  const Scalar z2 = ((1 - 2 / (9 * a)) -
                     std::copysign(std::cbrt(ratio), denom)) /
                    std::sqrt(2 / (9 * a));

  const Scalar k2 = z1 * z1 + z2 * z2;
  return {k2, chi_squared2_sf(k2)};
}

}  // namespace sstn
