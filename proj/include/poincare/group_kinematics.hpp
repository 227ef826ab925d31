#pragma once

// Complex Euler angles, the complex two-sphere and the SL(2,C) -> SO(3,C)
// action.
//
// Parameter naming: the third Euler angle is called `chi` everywhere (the
// usual literature symbol is psi, which is reserved here for wave functions);
// its boost partner is `vareps`. The complex angles are
//   phi_c = phi - i*epsilon,  theta_c = theta - i*tau,  chi_c = chi - i*vareps.

#include "poincare/types.hpp"

#include <array>

namespace poincare {

/// Raw, unvalidated six-parameter point of the Lorentz group manifold. Used
/// where the evaluation must step outside the canonical chart, e.g. finite
/// difference stencils.
struct EulerParameters {
  double phi = 0.0;
  double epsilon = 0.0;
  double theta = 0.0;
  double tau = 0.0;
  double chi = 0.0;
  double vareps = 0.0;

  Complex phi_c() const { return {phi, -epsilon}; }
  Complex theta_c() const { return {theta, -tau}; }
  Complex chi_c() const { return {chi, -vareps}; }

  /// Complex conjugate chart: phi + i*epsilon, theta + i*tau, chi + i*vareps.
  Complex phi_c_dotted() const { return {phi, epsilon}; }
  Complex theta_c_dotted() const { return {theta, tau}; }
  Complex chi_c_dotted() const { return {chi, vareps}; }
};

/// Validated complex Euler angles: 0 <= theta <= pi, 0 <= phi < 2pi,
/// -2pi <= chi < 2pi; the three imaginary parts are unrestricted.
class ComplexEulerAngles {
 public:
  /// Throws ValidationError naming the first offending parameter.
  static ComplexEulerAngles make(double phi, double epsilon, double theta, double tau,
                                 double chi, double vareps);
  static ComplexEulerAngles identity() { return ComplexEulerAngles{EulerParameters{}}; }

  const EulerParameters& parameters() const { return params_; }
  double phi() const { return params_.phi; }
  double epsilon() const { return params_.epsilon; }
  double theta() const { return params_.theta; }
  double tau() const { return params_.tau; }
  double chi() const { return params_.chi; }
  double vareps() const { return params_.vareps; }

  Complex phi_c() const { return params_.phi_c(); }
  Complex theta_c() const { return params_.theta_c(); }
  Complex chi_c() const { return params_.chi_c(); }

 private:
  explicit ComplexEulerAngles(EulerParameters p) : params_(p) {}
  EulerParameters params_;
};

/// A point z of C^3; the complex sphere through it has radius^2 = z.z.
struct ComplexSpherePoint {
  Vector3cd z = Vector3cd::Zero();

  static ComplexSpherePoint from_parts(const Vector3d& x, const Vector3d& y) {
    return {x.cast<Complex>() + Complex(0.0, 1.0) * y.cast<Complex>()};
  }
  Vector3d real_part() const { return z.real(); }
  Vector3d imag_part() const { return z.imag(); }

  /// r^2 = x^2 - y^2 + 2i x.y written through the real and imaginary parts.
  Complex invariant_from_parts() const;
  /// Conjugate (dual) sphere radius^2.
  Complex conjugate_invariant() const;
};

/// z1^2 + z2^2 + z3^2 (bilinear, no conjugation).
Complex sphere_invariant(const ComplexSpherePoint& p);

/// Unimodular complex 2x2 matrix [[alpha, beta], [gamma, delta]].
class SL2CElement {
 public:
  static constexpr double kDeterminantTolerance = 1e-12;

  /// Throws ValidationError if |det - 1| exceeds kDeterminantTolerance.
  static SL2CElement make(const Matrix2cd& m);
  static SL2CElement make(Complex alpha, Complex beta, Complex gamma, Complex delta);
  static SL2CElement identity() { return SL2CElement(Matrix2cd::Identity()); }

  const Matrix2cd& matrix() const { return m_; }
  Complex alpha() const { return m_(0, 0); }
  Complex beta() const { return m_(0, 1); }
  Complex gamma() const { return m_(1, 0); }
  Complex delta() const { return m_(1, 1); }

  SL2CElement inverse() const;
  friend SL2CElement operator*(const SL2CElement& a, const SL2CElement& b) {
    return SL2CElement(a.m_ * b.m_);
  }

 private:
  friend SL2CElement sl2c_from_angles(const EulerParameters& p);
  explicit SL2CElement(const Matrix2cd& m) : m_(m) {}
  Matrix2cd m_;
};

/// Group element g = exp(-i phi_c s3/2) exp(+i theta_c s1/2) exp(-i chi_c s3/2).
/// With this chart the spin-1/2 generalized hyperspherical functions are the
/// matrix entries of g, rows/columns ordered m = +1/2, -1/2.
SL2CElement sl2c_from_angles(const EulerParameters& p);
inline SL2CElement sl2c_from_angles(const ComplexEulerAngles& a) {
  return sl2c_from_angles(a.parameters());
}

/// Complex orthogonal R(g) defined by g (z.sigma) g^{-1} = (R z).sigma.
Matrix3cd sl2c_to_complex_rotation(const SL2CElement& g);
/// Validating overload; throws ValidationError for non-unimodular input.
Matrix3cd sl2c_to_complex_rotation(const Matrix2cd& g);

/// The three Pauli matrices.
const std::array<Matrix2cd, 3>& pauli_matrices();

}  // namespace poincare
