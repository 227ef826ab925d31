#include "doctest.h"

#include "poincare/assembly.hpp"

#include <random>

using namespace poincare;

TEST_CASE("value at the origin") {
  const WaveVector k = WaveVector::make(1, 2, 3);
  const auto radial = radial_solutions(1, 0.5, 0.5, RadialVariant::Corrected);
  ConfigurationPoint p;
  p.r = 1.5;
  const Vector6cd v = assemble(k, Helicity::Zero, radial, p, false);
  const Vector3cd e0 = polarization_vectors(k).eps_zero;
  Vector6cd expected;
  expected << e0, e0;
  expected *= plane_wave_normalization() * radial.value(0, 1.5);
  CHECK((v - expected).norm() < 1e-16);
}

TEST_CASE("factorization into translation and Lorentz factors") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0, 1);
  const WaveVector k = WaveVector::make(-0.4, 1.1, 0.6);
  const auto radial = radial_solutions(1, Complex(0.2, -0.4), Complex(1.0, 0.3), RadialVariant::Corrected);
  for (int i = 0; i < 100; ++i) {
    ConfigurationPoint p;
    p.x = Vector3d(u(rng), u(rng), u(rng)) * 4.0;
    p.t = 3 * u(rng);
    p.r = std::polar(0.5 + u(rng), 6 * u(rng) - 3);
    p.angles.phi = 6 * u(rng);
    p.angles.epsilon = u(rng) - 0.5;
    p.angles.theta = 3 * u(rng);
    p.angles.tau = u(rng) - 0.5;
    for (Helicity h : {Helicity::Plus, Helicity::Zero, Helicity::Minus}) {
      for (bool dotted : {false, true}) {
        const PoincareWaveFunction psi{k, h, radial, dotted, 1.0};
        const Vector6cd v = psi(p);
        const Vector6cd tf = psi.translation_factor(p.x, p.t);
        const Complex lf = psi.lorentz_factor(p.angles, p.r);
        CHECK((v - tf * lf).norm() <= 1e-12 * std::max(1.0, v.norm()));
        Eigen::Index j;
        tf.cwiseAbs().maxCoeff(&j);
        CHECK(std::abs(v(j) / tf(j) - lf) < 1e-12 * std::max(1.0, std::abs(lf)));
      }
    }
  }
}

TEST_CASE("catalog and physical filter") {
  const WaveVector k = WaveVector::make(0.3, 0.4, 1.2);
  const auto cat = make_catalog(k, radial_solutions(1, 1.0, 1.0, RadialVariant::Corrected));
  REQUIRE(cat.members.size() == 6);
  const char* names[] = {"psi_1", "psi_0", "psi_-1", "psidot_1", "psidot_0", "psidot_-1"};
  for (int i = 0; i < 6; ++i) CHECK(cat.members[i].name == names[i]);
  const auto phys = physical_filter(cat);
  REQUIRE(phys.size() == 2);
  CHECK(phys[0].name == "psi_1");
  CHECK(phys[1].name == "psi_-1");
  CHECK(cat.members[1].tag == MemberTag::Longitudinal);
  CHECK(cat.members[1].evidence == doctest::Approx(k.norm()).epsilon(1e-14));
  CHECK(cat.members[3].tag == MemberTag::NegativeEnergy);
  CHECK(std::string(to_string(cat.members[4].tag)) == "excluded-by-transversality");
  CHECK(std::string(to_string(MemberTag::NegativeEnergy)) == "negative-energy");
}

TEST_CASE("dotted member is the conjugate on real rotations") {
  const WaveVector k = WaveVector::make(0.7, -0.2, 0.5);
  const Complex C(0.6, -0.8);
  const auto radial = radial_solutions(1, C, std::conj(C), RadialVariant::Corrected);
  ConfigurationPoint p;
  p.x = Vector3d(0.3, 1.0, -2.0);
  p.t = 0.9;
  p.r = 1.7;
  p.angles.phi = 2.0;
  p.angles.theta = 0.8;
  p.angles.chi = -1.0;
  for (Helicity h : {Helicity::Plus, Helicity::Zero, Helicity::Minus}) {
    const Vector6cd u = assemble(k, h, radial, p, false);
    const Vector6cd d = assemble(k, h, radial, p, true);
    CHECK((d - u.conjugate()).norm() < 1e-15);
  }
}
