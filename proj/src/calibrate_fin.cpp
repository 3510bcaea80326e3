#include "sstn/calibrate_fin.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "sstn/deviation.hpp"
#include "sstn/errors.hpp"
#include "sstn/parallel.hpp"
#include "sstn/rng.hpp"
#include "sstn/sample.hpp"

namespace sstn {

CalibrationTable calibrate_finite(int sample_size, const SstnConfig& config,
                                  int threads) {
  config.validate();
  if (sample_size < 4 || sample_size >= config.finite_threshold) {
    throw InvalidConfig("finite calibration requires 4 <= n < " +
                        std::to_string(config.finite_threshold) + ", got n = " +
                        std::to_string(sample_size));
  }
  if (config.replicates < 2) {
    throw InvalidConfig("calibration needs at least 2 replicates");
  }

  Matrix batch(config.replicates, config.max_level);
  parallel_for(
      config.replicates,
      [&](Index b) {
        Rng rng = substream(config.seed,
                            {stream::kFiniteCalibration,
                             static_cast<std::uint64_t>(sample_size),
                             static_cast<std::uint64_t>(b)});
        std::normal_distribution<Scalar> normal;
        Vector draws(sample_size);
        for (Index k = 0; k < draws.size(); ++k) draws[k] = normal(rng);
        batch.row(b) = discrepancy_vector(Sample(std::move(draws)), config).q;
      },
      threads);

  const Vector mu = batch.colwise().mean();
  const Vector sigma =
      ((batch.rowwise() - mu.transpose()).colwise().squaredNorm() /
       (config.replicates - 1))
          .cwiseSqrt()
          .transpose();
  if ((sigma.array() <= 0).any()) {
    throw DegenerateCalibration("zero variance in a finite calibration level");
  }

  Vector replicates(config.replicates);
  for (Index b = 0; b < batch.rows(); ++b) {
    replicates[b] =
        ((batch.row(b).transpose() - mu).array() / sigma.array()).abs().maxCoeff();
  }
  std::sort(replicates.begin(), replicates.end());

  CalibrationTable table{TableKey::finite(sample_size, config), mu, sigma,
                         std::move(replicates)};
  validate(table);
  return table;
}

}  // namespace sstn
