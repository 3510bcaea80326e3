#include "sstn/calibrate_asy.hpp"

#include <cmath>
#include <random>
#include <string>

#include <Eigen/Eigenvalues>

#include "sstn/corefn.hpp"
#include "sstn/errors.hpp"
#include "sstn/parallel.hpp"

namespace sstn {

LimitCovariance build_covariance(const Grid& grid) {
  const Index size = grid.size();
  const Index dim = 2 * size + 2;
  Matrix cov = Matrix::Zero(dim, dim);
  for (Index h = 0; h < size; ++h) {
    const Scalar th = grid.point(h);
    for (Index l = 0; l < size; ++l) {
      const Scalar tl = grid.point(l);
      cov(h, l) = 0.5 * (psi0(th - tl) + psi0(th + tl) - 2 * psi0(th) * psi0(tl));
      cov(size + h, size + l) = 0.5 * (psi0(th - tl) - psi0(th + tl));
    }
    const Scalar cross1 = -0.5 * th * th * psi0(th);  // Cov(G1(t_h), Y2)
    const Scalar cross2 = th * psi0(th);              // Cov(G2(t_h), Y1)
    cov(h, dim - 1) = cross1;
    cov(dim - 1, h) = cross1;
    cov(size + h, dim - 2) = cross2;
    cov(dim - 2, size + h) = cross2;
  }
  cov(dim - 2, dim - 2) = 1.0;
  cov(dim - 1, dim - 1) = 0.5;
  return {std::move(cov)};
}

LimitProcessSampler::LimitProcessSampler(const LimitCovariance& covariance,
                                         Scalar clamp_tolerance) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(covariance.matrix);
  if (solver.info() != Eigen::Success) {
    throw FactorizationFailure("eigendecomposition of the limit covariance failed");
  }
  Vector eigenvalues = solver.eigenvalues();
  const Scalar largest = eigenvalues.maxCoeff();
  if (!(largest > 0)) {
    throw FactorizationFailure("limit covariance has no positive eigenvalue");
  }
  const Scalar floor = -clamp_tolerance * largest;
  for (Index i = 0; i < eigenvalues.size(); ++i) {
    if (eigenvalues[i] < floor) {
      throw FactorizationFailure(
          "limit covariance eigenvalue " + std::to_string(eigenvalues[i]) +
          " below clamping tolerance; covariance construction is inconsistent");
    }
    if (eigenvalues[i] < 0) eigenvalues[i] = 0;
  }
  transform_ = solver.eigenvectors() * eigenvalues.cwiseSqrt().asDiagonal();
}

Vector LimitProcessSampler::sample(Rng& rng) const {
  std::normal_distribution<Scalar> normal;
  Vector shocks(dim());
  for (Index i = 0; i < shocks.size(); ++i) shocks[i] = normal(rng);
  return transform_ * shocks;
}

ComplexSeries assemble_g0(const Vector& gvec, const Grid& grid) {
  const Index size = grid.size();
  if (gvec.size() != 2 * size + 2) {
    throw LengthMismatch("limit vector has length " + std::to_string(gvec.size()) +
                         ", expected " + std::to_string(2 * size + 2));
  }
  const Scalar y1 = gvec[2 * size];
  const Scalar y2 = gvec[2 * size + 1];
  ComplexVector values(size);
  for (Index h = 0; h < size; ++h) {
    const Scalar t = grid.point(h);
    const Scalar envelope = psi0(t);
    values[h] = Complex{gvec[h] + t * t * envelope * y2,
                        gvec[size + h] - t * envelope * y1};
  }
  return {grid, std::move(values)};
}

DiscrepancyVector simulate_q_limit(const LimitProcessSampler& sampler,
                                   const Grid& grid, const SstnConfig& config,
                                   Rng& rng) {
  const ComplexSeries g0 = assemble_g0(sampler.sample(rng), grid);
  return discrepancies_from_series(g0, config.max_level, config.beta);
}

namespace {

/// B realizations of (Q_1..Q_M), one row per replicate, with per-replicate
/// substreams so the batch is schedule-independent.
Matrix limit_batch(const LimitProcessSampler& sampler, const Grid& grid,
                   const SstnConfig& config, std::uint64_t domain, int threads) {
  Matrix batch(config.replicates, config.max_level);
  parallel_for(
      config.replicates,
      [&](Index b) {
        Rng rng = substream(config.seed, {domain, static_cast<std::uint64_t>(b)});
        batch.row(b) = simulate_q_limit(sampler, grid, config, rng).q;
      },
      threads);
  return batch;
}

}  // namespace

CalibrationTable calibrate_asymptotic(const SstnConfig& config, int threads) {
  config.validate();
  if (config.replicates < 2) {
    throw InvalidConfig("calibration needs at least 2 replicates");
  }
  const Grid grid = make_grid(config.bound, config.grid_size);
  const LimitProcessSampler sampler(build_covariance(grid));

  const Matrix moments_batch =
      limit_batch(sampler, grid, config, stream::kAsymptoticMoments, threads);
  const Vector mu = moments_batch.colwise().mean();
  const Vector sigma =
      ((moments_batch.rowwise() - mu.transpose()).colwise().squaredNorm() /
       (config.replicates - 1))
          .cwiseSqrt()
          .transpose();
  if ((sigma.array() <= 0).any()) {
    throw DegenerateCalibration("zero variance in an asymptotic calibration level");
  }

  const Matrix replicate_batch =
      limit_batch(sampler, grid, config, stream::kAsymptoticReplicates, threads);
  Vector replicates(config.replicates);
  for (Index b = 0; b < replicate_batch.rows(); ++b) {
    replicates[b] = ((replicate_batch.row(b).transpose() - mu).array() / sigma.array())
                        .abs()
                        .maxCoeff();
  }
  std::sort(replicates.begin(), replicates.end());

  CalibrationTable table{TableKey::asymptotic(config), mu, sigma,
                         std::move(replicates)};
  validate(table);
  return table;
}

}  // namespace sstn
