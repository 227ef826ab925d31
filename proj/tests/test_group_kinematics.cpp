#include "doctest.h"

#include "poincare/group_kinematics.hpp"

#include <random>

using namespace poincare;

namespace {

EulerParameters sample(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  EulerParameters p;
  p.phi = 2 * kPi * u(rng);
  p.epsilon = u(rng) - 0.5;
  p.theta = kPi * u(rng);
  p.tau = 2 * u(rng) - 1;
  p.chi = 4 * kPi * u(rng) - 2 * kPi;
  p.vareps = u(rng) - 0.5;
  return p;
}

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ValidationError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("complex angle components") {
  const auto a = ComplexEulerAngles::make(0.5, 0.2, 1.0, -0.3, 0.1, 0.4);
  CHECK(a.phi_c() == Complex(0.5, -0.2));
  CHECK(a.theta_c() == Complex(1.0, 0.3));
  CHECK(a.chi_c() == Complex(0.1, -0.4));
  CHECK(a.parameters().theta_c_dotted() == Complex(1.0, -0.3));
}

TEST_CASE("angle ranges are enforced and named") {
  CHECK(message_of([] { ComplexEulerAngles::make(0, 0, 3.5, 0, 0, 0); }).find("theta") !=
        std::string::npos);
  CHECK(message_of([] { ComplexEulerAngles::make(2 * kPi, 0, 1, 0, 0, 0); }).find("phi") !=
        std::string::npos);
  CHECK(message_of([] { ComplexEulerAngles::make(0, 0, 1, 0, 2 * kPi, 0); }).find("chi") !=
        std::string::npos);
  CHECK_THROWS_AS(ComplexEulerAngles::make(0, NAN, 1, 0, 0, 0), ValidationError);
  CHECK_NOTHROW(ComplexEulerAngles::make(0, 5, kPi, -7, -2 * kPi, 3));
}

TEST_CASE("identity angles give the identity element") {
  const SL2CElement g = sl2c_from_angles(ComplexEulerAngles::identity());
  CHECK((g.matrix() - Matrix2cd::Identity()).norm() == 0.0);
  CHECK((sl2c_to_complex_rotation(g) - Matrix3cd::Identity()).norm() < 1e-15);
}

TEST_CASE("SL(2,C) elements are unimodular and map to complex rotations") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    const SL2CElement g = sl2c_from_angles(sample(rng));
    const SL2CElement h = sl2c_from_angles(sample(rng));
    CHECK(std::abs(g.matrix().determinant() - 1.0) < 1e-13);
    const Matrix3cd r = sl2c_to_complex_rotation(g);
    CHECK((r.transpose() * r - Matrix3cd::Identity()).norm() < 1e-12 * r.squaredNorm());
    CHECK(std::abs(r.determinant() - 1.0) < 1e-11 * r.squaredNorm());
    const Matrix3cd rh = sl2c_to_complex_rotation(g * h);
    CHECK((rh - r * sl2c_to_complex_rotation(h)).norm() < 1e-12 * rh.squaredNorm());
    CHECK((g * g.inverse()).matrix().isIdentity(1e-13));
  }
}

TEST_CASE("pure rotations map to real orthogonal matrices") {
  EulerParameters p;
  p.phi = 0.3;
  p.theta = 1.1;
  p.chi = -0.7;
  const Matrix3cd r = sl2c_to_complex_rotation(sl2c_from_angles(p));
  CHECK(r.imag().norm() < 1e-15);
  CHECK((r.real().transpose() * r.real() - Eigen::Matrix3d::Identity()).norm() < 1e-14);
}

TEST_CASE("the complex sphere radius is invariant") {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> n;
  for (int i = 0; i < 50; ++i) {
    const auto z = ComplexSpherePoint::from_parts(Vector3d(n(rng), n(rng), n(rng)),
                                                  Vector3d(n(rng), n(rng), n(rng)));
    const Matrix3cd r = sl2c_to_complex_rotation(sl2c_from_angles(sample(rng)));
    const ComplexSpherePoint rz{r * z.z};
    CHECK(std::abs(sphere_invariant(rz) - sphere_invariant(z)) <
          1e-12 * r.squaredNorm() * z.z.squaredNorm());
    CHECK(std::abs(z.invariant_from_parts() - sphere_invariant(z)) < 1e-13 * z.z.squaredNorm());
    CHECK(std::abs(z.conjugate_invariant() - std::conj(sphere_invariant(z))) <
          1e-13 * z.z.squaredNorm());
  }
}

TEST_CASE("non-unimodular matrices are rejected") {
  CHECK_THROWS_AS(SL2CElement::make(2.0, 0.0, 0.0, 1.0), ValidationError);
  Matrix2cd m;
  m << 1.0, 1.0, 0.0, 1.0;
  CHECK_NOTHROW(SL2CElement::make(m));
  m(1, 1) = 1.1;
  CHECK_THROWS_AS(sl2c_to_complex_rotation(m), ValidationError);
}

TEST_CASE("Pauli matrices") {
  const auto& s = pauli_matrices();
  for (int i = 0; i < 3; ++i) {
    CHECK((s[i] * s[i]).isIdentity(0.0));
    CHECK(s[i].isApprox(s[i].adjoint()));
  }
  CHECK((s[0] * s[1] - Complex(0, 1) * s[2]).norm() == 0.0);
}
