#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace poincare {

using Complex = std::complex<double>;

template <typename Scalar>
using Matrix3c = Eigen::Matrix<std::complex<Scalar>, 3, 3>;
template <typename Scalar>
using Matrix6c = Eigen::Matrix<std::complex<Scalar>, 6, 6>;
template <typename Scalar>
using Vector3c = Eigen::Matrix<std::complex<Scalar>, 3, 1>;
template <typename Scalar>
using Vector6c = Eigen::Matrix<std::complex<Scalar>, 6, 1>;

using Matrix2cd = Eigen::Matrix2cd;
using Matrix3cd = Matrix3c<double>;
using Matrix6cd = Matrix6c<double>;
using Vector3cd = Vector3c<double>;
using Vector6cd = Vector6c<double>;
using Vector3d = Eigen::Vector3d;

/// Raised when an input violates a documented range or structural constraint.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an evaluation point lies inside an excluded (singular) zone.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a hypergeometric parameter set does not give a finite sum.
class UnsupportedParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr double kPi = 3.14159265358979323846264338327950288;

}  // namespace poincare
