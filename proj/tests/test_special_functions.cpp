#include "doctest.h"

#include "poincare/special_functions.hpp"
#include "poincare/types.hpp"

#include <cmath>

using namespace poincare;

TEST_CASE("factorial table is exact") {
  CHECK(factorial<double>(0) == 1.0);
  CHECK(factorial<double>(5) == 120.0);
  CHECK(factorial<double>(20) == 2432902008176640000.0);
  CHECK_THROWS(factorial<double>(-1));
  CHECK_THROWS(factorial<double>(kMaxFactorial + 1));
}

TEST_CASE("reciprocal gamma") {
  CHECK(gamma_reciprocal<double>(1.0) == 1.0);
  CHECK(gamma_reciprocal<double>(0.0) == 0.0);
  CHECK(gamma_reciprocal<double>(4.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(gamma_reciprocal<double>(-3.0) == 0.0);
  CHECK(gamma_reciprocal<double>(0.5) == doctest::Approx(1.0 / std::sqrt(kPi)).epsilon(1e-15));
  CHECK(gamma_reciprocal<double>(-0.5) ==
        doctest::Approx(-1.0 / (2.0 * std::sqrt(kPi))).epsilon(1e-14));
  CHECK_THROWS_AS(gamma_reciprocal<double>(0.3), ValidationError);
}

TEST_CASE("powers of i") {
  CHECK(i_power<double>(0) == Complex(1, 0));
  CHECK(i_power<double>(1) == Complex(0, 1));
  CHECK(i_power<double>(-1) == Complex(0, -1));
  CHECK(i_power<double>(6) == Complex(-1, 0));
}

TEST_CASE("terminating 2F1 examples") {
  const Complex x(0.3, -0.2);
  CHECK(terminating_2f1<double>(0.0, 2.5, 1.5, x) == Complex(1.0));
  CHECK(std::abs(terminating_2f1<double>(-1.0, 1.0, 1.0, x) - (1.0 - x)) < 1e-16);
  CHECK(std::abs(terminating_2f1<double>(-2.0, -1.0, 2.0, Complex(0.5)) - 1.5) < 1e-15);
  // (-2)_j (3)_j / ((4)_j j!) x^j summed term by term.
  const double v = 0.7;
  const double ref = 1.0 + (-2.0 * 3.0 / 4.0) * v + (-2.0 * -1.0 * 3.0 * 4.0) / (4.0 * 5.0 * 2.0) * v * v;
  CHECK(std::abs(terminating_2f1<double>(-2.0, 3.0, 4.0, Complex(v)) - ref) < 1e-15);
}

TEST_CASE("non-terminating parameters are unsupported") {
  CHECK_THROWS_AS(terminating_2f1<double>(0.5, 1.5, 2.0, Complex(0.1)), UnsupportedParameters);
  // c = -1 would divide by zero before the series terminates at index 3.
  CHECK_THROWS_AS(terminating_2f1<double>(-3.0, 1.0, -1.0, Complex(0.1)), UnsupportedParameters);
  CHECK_NOTHROW(terminating_2f1<double>(-1.0, 1.0, -3.0, Complex(0.1)));
}

TEST_CASE("regularized 2F1 at c = -M follows the shifted series") {
  // F~(a, b; -M; x) = (a)_{M+1} (b)_{M+1} / (M+1)! x^{M+1} 2F1(a+M+1, b+M+1; M+2; x).
  const double a = -4.0, b = 2.0;
  const int M = 1;
  const auto f = regularized_2f1<double>(a, b, -double(M));
  CHECK(f.power == M + 1);
  const double x = 0.37;
  double value = 0.0;
  for (std::size_t j = 0; j < f.terms.size(); ++j) value += f.terms[j] * std::pow(x, f.power + int(j));
  value *= f.coefficient;
  const double poch = (a * (a + 1)) * (b * (b + 1)) / 2.0;
  const double ref =
      poch * x * x * terminating_2f1<double>(a + 2, b + 2, 3.0, Complex(x)).real();
  CHECK(value == doctest::Approx(ref).epsilon(1e-14));

  const auto plain = regularized_2f1<double>(-2.0, 1.0, 3.0);
  CHECK(plain.power == 0);
  CHECK(plain.coefficient == doctest::Approx(0.5).epsilon(1e-15));
}
