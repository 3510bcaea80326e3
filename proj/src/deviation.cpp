#include "sstn/deviation.hpp"

#include <cmath>

namespace sstn {

DeviationSeries deviation_process(const Sample& sample, const Grid& grid) {
  ComplexSeries star = standardized_ecf_on_grid(sample, grid);
  const Scalar root_n = std::sqrt(static_cast<Scalar>(sample.size()));
  for (Index h = 0; h < grid.size(); ++h) {
    star.values[h] = root_n * (star.values[h] - psi0(grid.point(h)));
  }
  return {std::move(star), sample.size()};
}

Scalar linearized_discrepancy(const ComplexSeries& h, Scalar beta) {
  const Grid& grid = h.grid;
  Vector integrand(grid.size());
  for (Index i = 0; i < grid.size(); ++i) {
    const Scalar t = grid.point(i);
    const Scalar envelope = psi0(t);
    integrand[i] = weight(t, beta) * envelope * envelope * std::norm(h.values[i]);
  }
  return riemann(integrand, grid);
}

DiscrepancyVector discrepancies_from_series(const ComplexSeries& u, int max_level,
                                            Scalar beta) {
  const GridInterpolant u_tilde(u);
  Vector q(max_level);
  for (int m = 1; m <= max_level; ++m) {
    q[m - 1] = linearized_discrepancy(transformed_deviation(u_tilde, m, u.grid), beta);
  }
  return {std::move(q)};
}

DiscrepancyVector discrepancy_vector(const Sample& sample, const SstnConfig& config) {
  const Grid grid = make_grid(config.bound, config.grid_size);
  const DeviationSeries u = deviation_process(sample, grid);
  return discrepancies_from_series(u.series, config.max_level, config.beta);
}

Complex complex_power(Complex z, int exponent) {
  Complex result{1, 0};
  for (int i = 0; i < exponent; ++i) result *= z;
  return result;
}

namespace detail {

Vector direct_discrepancies_from_transforms(
    const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>& transforms,
    const Grid& grid, Scalar beta) {
  const auto levels = transforms.cols() - 1;
  Vector delta(levels);
  Vector integrand(grid.size());
  for (Index m = 1; m <= levels; ++m) {
    for (Index h = 0; h < grid.size(); ++h) {
      integrand[h] = weight(grid.point(h), beta) *
                     std::norm(transforms(h, m) - transforms(h, m - 1));
    }
    delta[m - 1] = riemann(integrand, grid);
  }
  return delta;
}

}  // namespace detail

namespace {

/// Standardized ECF on the scaled grids t_h/sqrt(level), level = 1..levels
/// (one column per level), using the geometric progression
/// exp(i t_{h+1} z) = exp(i t_h z) exp(i dt z) along each column.  One pair
/// of trig evaluations per (observation, level) instead of one per
/// (observation, level, node); observations are processed four at a time so
/// the rotation chains pipeline instead of serializing on multiply latency.
Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic> scaled_ecf_table(
    const Vector& z, const Grid& grid, int levels) {
  const Index n = z.size();
  const Index size = grid.size();
  Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic> table(size, levels);
  table.setZero();
  for (int level = 1; level <= levels; ++level) {
    const Scalar scale = 1 / std::sqrt(static_cast<Scalar>(level));
    Complex* col = table.col(level - 1).data();
    auto phase = [&](Index k, Scalar multiple) {
      const Scalar angle = multiple * scale * z[k];
      return Complex{std::cos(angle), std::sin(angle)};
    };
    Index k = 0;
    for (; k + 4 <= n; k += 4) {
      Complex cur0 = phase(k, grid.point(0)), rot0 = phase(k, grid.spacing());
      Complex cur1 = phase(k + 1, grid.point(0)), rot1 = phase(k + 1, grid.spacing());
      Complex cur2 = phase(k + 2, grid.point(0)), rot2 = phase(k + 2, grid.spacing());
      Complex cur3 = phase(k + 3, grid.point(0)), rot3 = phase(k + 3, grid.spacing());
      for (Index h = 0; h < size; ++h) {
        col[h] += (cur0 + cur1) + (cur2 + cur3);
        cur0 *= rot0;
        cur1 *= rot1;
        cur2 *= rot2;
        cur3 *= rot3;
      }
    }
    for (; k < n; ++k) {
      Complex cur = phase(k, grid.point(0));
      const Complex rot = phase(k, grid.spacing());
      for (Index h = 0; h < size; ++h) {
        col[h] += cur;
        cur *= rot;
      }
    }
    table.col(level - 1) /= static_cast<Scalar>(n);
  }
  return table;
}

}  // namespace

DiscrepancyVector direct_discrepancy(const Sample& sample, const SstnConfig& config) {
  const Grid grid = make_grid(config.bound, config.grid_size);
  const Vector z = sample.standardized_values();
  auto table = scaled_ecf_table(z, grid, config.max_level + 1);
  for (int level = 1; level <= config.max_level + 1; ++level) {
    for (Index h = 0; h < grid.size(); ++h) {
      table(h, level - 1) = complex_power(table(h, level - 1), level);
    }
  }
  Vector delta =
      detail::direct_discrepancies_from_transforms(table, grid, config.beta);
  return {static_cast<Scalar>(sample.size()) * delta};
}

}  // namespace sstn
