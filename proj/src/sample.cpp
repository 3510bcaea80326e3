#include "sstn/sample.hpp"

#include <cmath>

#include "sstn/errors.hpp"

namespace sstn {

namespace {

void summarize(const Vector& values, Scalar& mean, Scalar& sd) {
  mean = values.mean();
  const Scalar var = (values.array() - mean).square().mean();
  sd = std::sqrt(var);
}

}  // namespace

Sample::Sample(Vector values) : values_(std::move(values)) {
  if (values_.size() < 2) {
    throw InvalidSample("sample needs at least 2 observations, got " +
                        std::to_string(values_.size()));
  }
  if (!values_.allFinite()) {
    throw InvalidSample("sample contains non-finite values");
  }
  summarize(values_, mean_, sd_);
}

Sample::Sample(std::span<const Scalar> values)
    : Sample(Eigen::Map<const Vector>(values.data(),
                                      static_cast<Index>(values.size()))) {}

Vector Sample::standardized_values() const {
  if (sd_ == 0) {
    throw DegenerateSample("all observations identical; standardization undefined");
  }
  return (values_.array() - mean_) / sd_;
}

}  // namespace sstn
