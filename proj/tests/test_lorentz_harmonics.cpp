#include "doctest.h"

#include "oracles/wigner_d.hpp"
#include "poincare/lorentz_harmonics.hpp"
#include "poincare/verify.hpp"

using namespace poincare;

namespace {

Complex z(double l, double m, double n, double theta, double tau, bool dotted = false) {
  return z_sum(HarmonicIndex::make(l, m, n, dotted), theta, tau);
}

}  // namespace

TEST_CASE("half-integers") {
  CHECK(HalfInt::from_double(1.5).twice() == 3);
  CHECK(HalfInt::from_double(-2).value() == -2.0);
  CHECK_FALSE(HalfInt::from_double(0.5).is_integer());
  CHECK_THROWS_AS(HalfInt::from_double(0.3), ValidationError);
  CHECK(to_string(HalfInt::from_twice(3)) == "3/2");
  CHECK(to_string(HalfInt::from_twice(-4)) == "-2");
}

TEST_CASE("index validation") {
  CHECK_THROWS_AS(HarmonicIndex::make(1, 2, 0), ValidationError);
  CHECK_THROWS_AS(HarmonicIndex::make(1, 0.5, 0), ValidationError);
  CHECK_THROWS_AS(HarmonicIndex::make(-1, 0, 0), ValidationError);
  CHECK_THROWS_AS(HarmonicIndex::make(11, 0, 0), ValidationError);
  CHECK_NOTHROW(HarmonicIndex::make(1.5, -0.5, 1.5));
  const auto all = HarmonicIndex::all_for(HalfInt::from_twice(3));
  REQUIRE(all.size() == 16);
  CHECK(all.front().m.twice() == 3);
  CHECK(all.front().n.twice() == 3);
  CHECK(all[1].n.twice() == 1);
  CHECK(all.back().m.twice() == -3);
}

TEST_CASE("point validation") {
  CHECK_THROWS_AS(z(1, 0, 0, -0.1, 0), ValidationError);
  CHECK_THROWS_AS(z(1, 0, 0, 3.2, 0), ValidationError);
  CHECK_THROWS_AS(z_2f1(HarmonicIndex::make(1, 0, 0), 1.0, INFINITY), ValidationError);
}

TEST_CASE("values at the identity") {
  CHECK(z(1, 0, 0, 0, 0) == Complex(1.0));
  CHECK(z(1, 1, 0, 0, 0) == Complex(0.0));
  for (int l2 = 0; l2 <= kMaxTwiceL; ++l2) {
    for (const auto& idx : HarmonicIndex::all_for(HalfInt::from_twice(l2))) {
      CHECK(z_sum(idx, 0.0, 0.0) == Complex(idx.m == idx.n ? 1.0 : 0.0));
    }
  }
}

TEST_CASE("double sum and hypergeometric form agree") {
  const auto idx = HarmonicIndex::make(1, 1, 1);
  CHECK(std::abs(z_sum(idx, 0.9, 0.4) - z_2f1(idx, 0.9, 0.4)) < 1e-12);
  for (int l2 = 0; l2 <= 8; ++l2) {
    for (const auto& i : HarmonicIndex::all_for(HalfInt::from_twice(l2))) {
      for (double th : {0.0, 0.2, 1.3, 2.9, kPi}) {
        for (double ta : {-1.5, 0.0, 0.7}) {
          const Complex a = z_sum(i, th, ta), b = z_2f1(i, th, ta);
          CHECK(std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(a)));
        }
      }
    }
  }
}

TEST_CASE("zonal and Legendre specializations") {
  for (double th : {0.3, 1.2, 2.5}) {
    for (double ta : {-0.8, 0.0, 0.6}) {
      const Complex zc = std::cos(Complex(th, -ta));
      CHECK(std::abs(zonal_z(HalfInt::from_twice(2), th, ta) - zc) < 1e-14);
      CHECK(std::abs(zonal_z(HalfInt::from_twice(4), th, ta) - 0.5 * (3.0 * zc * zc - 1.0)) < 1e-13);
    }
  }
  CHECK(std::abs(section3_z(1, 1, 0.6, 0.0) - z_2f1(HarmonicIndex::make(1, 1, 0), 0.6, 0.0)) < 1e-12);
  CHECK(std::abs(section3_z(2, -1, 0.3, 0.8) - z_2f1(HarmonicIndex::make(2, -1, 0), 0.3, 0.8)) <
        1e-12);
  CHECK_THROWS_AS(section3_z(0, 0, 0.3, 0.0), ValidationError);
  CHECK_THROWS_AS(section3_z(2, 2, 0.3, 0.0), ValidationError);
}

TEST_CASE("symmetries") {
  for (double th : {0.4, 2.0}) {
    for (double ta : {-0.5, 0.9}) {
      CHECK(std::abs(z(2, 1, -1, th, ta) - z(2, -1, 1, th, ta)) < 1e-13);
      CHECK(std::abs(z(1, -1, 0, th, ta) - z(1, 1, 0, th, ta)) < 1e-13);
      CHECK(z(1.5, 0.5, -1.5, th, ta, true) == std::conj(z(1.5, 0.5, -1.5, th, ta)));
    }
  }
}

TEST_CASE("rotation restriction is the Wigner d matrix") {
  for (int l2 = 0; l2 <= 8; ++l2) {
    const int dim = l2 + 1;
    const auto all = HarmonicIndex::all_for(HalfInt::from_twice(l2));
    for (double th : theta_grid(9)) {
      const Eigen::MatrixXd d = oracle::wigner_d(l2, th);
      Eigen::MatrixXcd zm(dim, dim);
      for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
          const auto& idx = all[i * dim + j];
          zm(i, j) = z_sum(idx, th, 0.0);
          const Complex phase = i_power<double>((idx.n.twice() - idx.m.twice()) / 2);
          CHECK(std::abs(zm(i, j) - phase * d(i, j)) < 1e-12);
        }
      }
      CHECK((zm * zm.adjoint()).isIdentity(1e-12));
    }
  }
}

TEST_CASE("spin one-half generalized functions are the group element") {
  EulerParameters p;
  p.phi = 0.7;
  p.epsilon = -0.2;
  p.theta = 1.9;
  p.tau = 0.45;
  p.chi = -2.1;
  p.vareps = 0.3;
  const Matrix2cd g = sl2c_from_angles(p).matrix();
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const auto idx = HarmonicIndex::from_twice(1, 1 - 2 * a, 1 - 2 * b);
      CHECK(std::abs(generalized_m(idx, p) - g(a, b)) < 1e-15);
    }
  }
}

TEST_CASE("generalized, associated and zonal functions") {
  const auto a = ComplexEulerAngles::make(0.4, 0.1, 1.0, 0.2, 0.9, -0.3);
  const auto idx = HarmonicIndex::make(2, 1, -1);
  const Complex expected = std::exp(-1.0 * Complex(0.1, 0.4)) * z(2, 1, -1, 1.0, 0.2) *
                           std::exp(1.0 * Complex(-0.3, 0.9));
  CHECK(std::abs(generalized_m(idx, a) - expected) < 1e-14);
  auto dotted = idx;
  dotted.dotted = true;
  CHECK(std::abs(generalized_m(dotted, a) - std::conj(expected)) < 1e-14);
  const Complex assoc = associated_m(HalfInt::from_twice(2), HalfInt::from_twice(2), a);
  CHECK(std::abs(assoc - std::exp(-Complex(0.1, 0.4)) * z(1, 1, 0, 1.0, 0.2)) < 1e-14);
  CHECK_THROWS_AS(associated_m(HalfInt::from_twice(1), HalfInt::from_twice(1), a),
                  ValidationError);
  CHECK_THROWS_AS(zonal_z(HalfInt::from_twice(3), 1.0, 0.0), ValidationError);
}

TEST_CASE("factor functions reproduce Z") {
  const HalfInt l = HalfInt::from_twice(4);
  for (const auto& idx : HarmonicIndex::all_for(l)) {
    Complex sum = 0.0;
    for (int k2 = -4; k2 <= 4; k2 += 2) {
      const HalfInt k = HalfInt::from_twice(k2);
      sum += su2_factor_p(l, idx.m, k, 1.3) * qu2_factor_jacobi(l, k, idx.n, -0.6);
    }
    CHECK(std::abs(sum - z_sum(idx, 1.3, -0.6)) < 1e-13);
  }
}
