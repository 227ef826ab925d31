#pragma once

// Gamma reciprocals at (half-)integer points and terminating Gauss
// hypergeometric sums.

#include "poincare/types.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

namespace poincare {

/// Largest n for which n! is stored exactly.
inline constexpr int kMaxFactorial = 22;

/// n! as an exactly rounded double, 0 <= n <= kMaxFactorial.
template <typename Real = double>
Real factorial(int n) {
  static const std::array<Real, kMaxFactorial + 1> table = [] {
    std::array<Real, kMaxFactorial + 1> t{};
    t[0] = Real(1);
    for (int i = 1; i <= kMaxFactorial; ++i) t[i] = t[i - 1] * Real(i);
    return t;
  }();
  if (n < 0 || n > kMaxFactorial) {
    throw ValidationError("factorial argument out of table range: " + std::to_string(n));
  }
  return table[n];
}

/// 1/Gamma(x) for integer or half-integer x. Exactly zero at the poles
/// x = 0, -1, -2, ...; exact factorial reciprocal at positive integers.
template <typename Real = double>
Real gamma_reciprocal(Real x) {
  const Real twice = std::round(Real(2) * x);
  if (std::abs(Real(2) * x - twice) > Real(1e-9)) {
    throw ValidationError("gamma_reciprocal expects an integer or half-integer");
  }
  if (std::fmod(twice, Real(2)) == Real(0)) {
    const long n = std::lround(x);
    if (n <= 0) return Real(0);
    if (n - 1 <= kMaxFactorial) return Real(1) / factorial<Real>(static_cast<int>(n - 1));
  }
  return Real(1) / std::tgamma(x);
}

/// i^n for integer n, exact.
template <typename Real = double>
std::complex<Real> i_power(long n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {Real(1), Real(0)};
    case 1: return {Real(0), Real(1)};
    case 2: return {Real(-1), Real(0)};
    default: return {Real(0), Real(-1)};
  }
}

namespace detail {

template <typename Real>
bool is_nonpositive_integer(Real v, long& n) {
  const Real r = std::round(v);
  if (std::abs(v - r) > Real(1e-12) || r > Real(0)) return false;
  n = static_cast<long>(-r);
  return true;
}

}  // namespace detail

/// Coefficients t_j of the finite sum 2F1(a, b; c; x) = sum_j t_j x^j.
/// Requires a or b to be a non-positive integer -N; c = -M is accepted only
/// for M >= N. Throws UnsupportedParameters otherwise.
template <typename Real>
std::vector<Real> terminating_2f1_coefficients(Real a, Real b, Real c) {
  long na = 0, nb = 0;
  const bool ta = detail::is_nonpositive_integer(a, na);
  const bool tb = detail::is_nonpositive_integer(b, nb);
  if (!ta && !tb) {
    throw UnsupportedParameters(
        "2F1 series does not terminate: neither a nor b is a non-positive integer");
  }
  const long n_terms = ta && tb ? std::min(na, nb) : (ta ? na : nb);
  long mc = 0;
  if (detail::is_nonpositive_integer(c, mc) && mc < n_terms) {
    throw UnsupportedParameters("2F1 lower parameter is a pole inside the terminating range");
  }
  std::vector<Real> t(static_cast<std::size_t>(n_terms + 1));
  t[0] = Real(1);
  for (long j = 0; j < n_terms; ++j) {
    const Real jj = static_cast<Real>(j);
    t[j + 1] = t[j] * (a + jj) * (b + jj) / ((c + jj) * (jj + Real(1)));
  }
  return t;
}

/// Finite-sum evaluation of 2F1(a, b; c; x) (Horner).
template <typename Real, typename Scalar>
Scalar terminating_2f1(Real a, Real b, Real c, Scalar x) {
  const std::vector<Real> t = terminating_2f1_coefficients(a, b, c);
  Scalar sum(0);
  for (auto it = t.rbegin(); it != t.rend(); ++it) sum = sum * x + Scalar(*it);
  return sum;
}

/// Regularized terminating 2F1(a, b; c; x)/Gamma(c) written as
/// coefficient * x^power * sum_j terms[j] x^j with power >= 0. For c = -M the
/// pole of the lower parameter is removed analytically:
///   F~(a,b;-M;x) = (a)_{M+1} (b)_{M+1} / (M+1)! x^{M+1} 2F1(a+M+1, b+M+1; M+2; x).
template <typename Real>
struct RegularizedSeries {
  Real coefficient = Real(0);
  int power = 0;
  std::vector<Real> terms;
};

template <typename Real>
RegularizedSeries<Real> regularized_2f1(Real a, Real b, Real c) {
  long m = 0;
  if (!detail::is_nonpositive_integer(c, m)) {
    return {gamma_reciprocal<Real>(c), 0, terminating_2f1_coefficients(a, b, c)};
  }
  const long shift = m + 1;
  Real coeff = Real(1);
  for (long j = 0; j < shift; ++j) {
    const Real jj = static_cast<Real>(j);
    coeff *= (a + jj) * (b + jj) / (jj + Real(1));
  }
  if (coeff == Real(0)) return {Real(0), 0, {Real(0)}};
  const Real s = static_cast<Real>(shift);
  return {coeff, static_cast<int>(shift),
          terminating_2f1_coefficients(a + s, b + s, Real(shift + 1))};
}

}  // namespace poincare
