#include "poincare/group_kinematics.hpp"

#include <cmath>
#include <sstream>

namespace poincare {

namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw ValidationError(std::string("parameter ") + name + " must be finite");
  }
}

[[noreturn]] void range_error(const char* name, double v, const char* range) {
  std::ostringstream os;
  os.precision(17);
  os << "parameter " << name << " = " << v << " outside " << range;
  throw ValidationError(os.str());
}

}  // namespace

ComplexEulerAngles ComplexEulerAngles::make(double phi, double epsilon, double theta,
                                            double tau, double chi, double vareps) {
  require_finite(phi, "phi");
  require_finite(epsilon, "epsilon");
  require_finite(theta, "theta");
  require_finite(tau, "tau");
  require_finite(chi, "chi");
  require_finite(vareps, "vareps");
  if (!(phi >= 0.0 && phi < 2.0 * kPi)) range_error("phi", phi, "[0, 2pi)");
  if (!(theta >= 0.0 && theta <= kPi)) range_error("theta", theta, "[0, pi]");
  if (!(chi >= -2.0 * kPi && chi < 2.0 * kPi)) range_error("chi", chi, "[-2pi, 2pi)");
  return ComplexEulerAngles{EulerParameters{phi, epsilon, theta, tau, chi, vareps}};
}

Complex sphere_invariant(const ComplexSpherePoint& p) {
  return p.z(0) * p.z(0) + p.z(1) * p.z(1) + p.z(2) * p.z(2);
}

Complex ComplexSpherePoint::invariant_from_parts() const {
  const Vector3d x = real_part();
  const Vector3d y = imag_part();
  return {x.squaredNorm() - y.squaredNorm(), 2.0 * x.dot(y)};
}

Complex ComplexSpherePoint::conjugate_invariant() const {
  const Vector3cd zc = z.conjugate();
  return zc(0) * zc(0) + zc(1) * zc(1) + zc(2) * zc(2);
}

SL2CElement SL2CElement::make(const Matrix2cd& m) {
  const Complex det = m(0, 0) * m(1, 1) - m(1, 0) * m(0, 1);
  if (!m.allFinite() || std::abs(det - 1.0) > kDeterminantTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "SL(2,C) element must be unimodular, det = " << det;
    throw ValidationError(os.str());
  }
  return SL2CElement(m);
}

SL2CElement SL2CElement::make(Complex alpha, Complex beta, Complex gamma, Complex delta) {
  Matrix2cd m;
  m << alpha, beta, gamma, delta;
  return make(m);
}

SL2CElement SL2CElement::inverse() const {
  Matrix2cd inv;
  inv << m_(1, 1), -m_(0, 1), -m_(1, 0), m_(0, 0);
  return SL2CElement(inv);
}

const std::array<Matrix2cd, 3>& pauli_matrices() {
  static const std::array<Matrix2cd, 3> sigma = [] {
    const Complex i(0.0, 1.0);
    std::array<Matrix2cd, 3> s;
    s[0] << 0.0, 1.0, 1.0, 0.0;
    s[1] << 0.0, -i, i, 0.0;
    s[2] << 1.0, 0.0, 0.0, -1.0;
    return s;
  }();
  return sigma;
}

SL2CElement sl2c_from_angles(const EulerParameters& p) {
  const Complex i(0.0, 1.0);
  const auto z_rotation = [&](Complex a) {
    Matrix2cd m = Matrix2cd::Zero();
    m(0, 0) = std::exp(-0.5 * i * a);
    m(1, 1) = std::exp(0.5 * i * a);
    return m;
  };
  const Complex half = 0.5 * p.theta_c();
  Matrix2cd x_rotation;
  x_rotation << std::cos(half), i * std::sin(half), i * std::sin(half), std::cos(half);
  return SL2CElement(z_rotation(p.phi_c()) * x_rotation * z_rotation(p.chi_c()));
}

Matrix3cd sl2c_to_complex_rotation(const SL2CElement& g) {
  const auto& sigma = pauli_matrices();
  const Matrix2cd& m = g.matrix();
  const Matrix2cd m_inv = g.inverse().matrix();
  Matrix3cd r;
  for (int j = 0; j < 3; ++j) {
    const Matrix2cd image = m * sigma[j] * m_inv;
    for (int i = 0; i < 3; ++i) {
      r(i, j) = 0.5 * (sigma[i] * image).trace();
    }
  }
  return r;
}

Matrix3cd sl2c_to_complex_rotation(const Matrix2cd& g) {
  return sl2c_to_complex_rotation(SL2CElement::make(g));
}

}  // namespace poincare
