#ifndef SSTN_SAMPLE_HPP
#define SSTN_SAMPLE_HPP

#include <span>
#include <utility>

#include "sstn/types.hpp"

namespace sstn {

/// An ordered collection of finite real observations with cached summary
/// statistics.  The standard deviation uses 1/n normalization (not 1/(n-1)),
/// which is the convention the whole pipeline is built on.  Immutable after
/// construction and safe to share across threads.
class Sample {
 public:
  /// Throws InvalidSample unless n >= 2 and every value is finite.
  explicit Sample(Vector values);
  explicit Sample(std::span<const Scalar> values);

  Index size() const { return values_.size(); }
  const Vector& values() const { return values_; }
  Scalar mean() const { return mean_; }

  /// 1/n-normalized standard deviation; zero iff all values are identical.
  Scalar sd() const { return sd_; }

  /// (x_k - mean) / sd.  Throws DegenerateSample when sd() == 0.
  Vector standardized_values() const;

 private:
  Vector values_;
  Scalar mean_ = 0;
  Scalar sd_ = 0;
};

}  // namespace sstn

#endif
