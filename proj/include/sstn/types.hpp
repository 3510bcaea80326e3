#ifndef SSTN_TYPES_HPP
#define SSTN_TYPES_HPP

#include <complex>

#include <Eigen/Core>

namespace sstn {

using Scalar = double;
using Complex = std::complex<Scalar>;

using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using ComplexVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Index = Eigen::Index;

}  // namespace sstn

#endif
