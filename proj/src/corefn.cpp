#include "sstn/corefn.hpp"

#include <string>

#include "sstn/errors.hpp"

namespace sstn {

namespace {

Complex ecf_of_values(const Vector& values, Scalar t) {
  const Vector phase = t * values.array();
  return {phase.array().cos().mean(), phase.array().sin().mean()};
}

}  // namespace

Complex ecf(const Sample& sample, Scalar t) {
  return ecf_of_values(sample.values(), t);
}

Complex standardized_ecf(const Sample& sample, Scalar t) {
  return ecf_of_values(sample.standardized_values(), t);
}

ComplexSeries standardized_ecf_on_grid(const Sample& sample, const Grid& grid) {
  const Vector z = sample.standardized_values();
  ComplexVector values(grid.size());
  for (Index h = 0; h < grid.size(); ++h) {
    values[h] = ecf_of_values(z, grid.point(h));
  }
  return {grid, std::move(values)};
}

Scalar riemann(const Vector& values, const Grid& grid) {
  if (values.size() != grid.size()) {
    throw LengthMismatch("riemann: " + std::to_string(values.size()) +
                         " values on a grid of size " + std::to_string(grid.size()));
  }
  return values.sum() * grid.spacing();
}

}  // namespace sstn
