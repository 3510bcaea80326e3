#ifndef SSTN_ERRORS_HPP
#define SSTN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sstn {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sample violates basic requirements (size, finiteness).
class InvalidSample : public Error {
 public:
  using Error::Error;
};

/// All observations identical; the standardized ECF is undefined.
class DegenerateSample : public Error {
 public:
  using Error::Error;
};

class InvalidConfig : public Error {
 public:
  using Error::Error;
};

/// Interpolation argument outside the grid range.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Covariance factorization could not be repaired by eigenvalue clamping.
class FactorizationFailure : public Error {
 public:
  using Error::Error;
};

/// A calibration batch produced a zero standard deviation.
class DegenerateCalibration : public Error {
 public:
  using Error::Error;
};

/// No calibration table could be loaded or built for the request.
class CalibrationUnavailable : public Error {
 public:
  using Error::Error;
};

/// A table file exists but fails format or integrity validation.
class CorruptTable : public Error {
 public:
  using Error::Error;
};

class UnsupportedSampleSize : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class IoFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace sstn

#endif
