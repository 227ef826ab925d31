#pragma once

// Hyperspherical functions Z^l_mn(theta, tau) on the Lorentz group and the
// generalized (M), associated and zonal functions built from them.

#include "poincare/group_kinematics.hpp"
#include "poincare/special_functions.hpp"

#include <string>
#include <vector>

namespace poincare {

/// Integer or half-integer value stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
  /// Throws ValidationError unless 2v is an integer.
  static HalfInt from_double(double v);

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  friend constexpr bool operator==(HalfInt a, HalfInt b) { return a.twice_ == b.twice_; }
  friend constexpr auto operator<=>(HalfInt a, HalfInt b) { return a.twice_ <=> b.twice_; }

 private:
  constexpr explicit HalfInt(int twice) : twice_(twice) {}
  int twice_ = 0;
};

std::string to_string(HalfInt h);

/// Largest l accepted; keeps every Gamma argument inside the exact table.
inline constexpr int kMaxTwiceL = 20;

/// (l, m, n) with |m|, |n| <= l and l - m, l - n integers. `dotted` selects the
/// conjugate series.
struct HarmonicIndex {
  HalfInt l, m, n;
  bool dotted = false;

  /// Throws ValidationError describing the violated constraint.
  static HarmonicIndex make(double l, double m, double n, bool dotted = false);
  static HarmonicIndex from_twice(int l2, int m2, int n2, bool dotted = false);

  /// All valid (m, n) pairs for a given l, m-major, descending from +l.
  static std::vector<HarmonicIndex> all_for(HalfInt l, bool dotted = false);
};

/// One summand factor of the double sum: the SU(2) half P^l_mk(cos theta)
/// carrying i^{m-k} and cos^{2l}(theta/2).
Complex su2_factor_p(HalfInt l, HalfInt m, HalfInt k, double theta);
/// The QU(2) half (Jacobi function) P^l_kn(cosh tau) carrying cosh^{2l}(tau/2).
double qu2_factor_jacobi(HalfInt l, HalfInt k, HalfInt n, double tau);

/// Double sum over k, j, s. Exact delta_mn at theta = tau = 0.
/// Throws ValidationError for theta outside [0, pi] or non-finite tau.
Complex z_sum(const HarmonicIndex& idx, double theta, double tau);

/// Single sum over k of two regularized terminating 2F1 factors.
Complex z_2f1(const HarmonicIndex& idx, double theta, double tau);

/// Z without range validation; used by finite-difference stencils.
Complex z_unchecked(const HarmonicIndex& idx, double theta, double tau);

/// Z^l_{m0} for m in {-1, 0, 1} and integer l >= 1 from Legendre polynomials
/// of z = cos(theta - i tau): P_l(z) and i sin(theta_c) P_l'(z)/sqrt(l(l+1)).
Complex section3_z(int l, int m, double theta, double tau);

/// e^{-m(eps + i phi)} Z e^{-n(vareps + i chi)}; the dotted series is the
/// complex conjugate, holomorphic in phi + i eps, theta + i tau, chi + i vareps.
Complex generalized_m(const HarmonicIndex& idx, const EulerParameters& p);
inline Complex generalized_m(const HarmonicIndex& idx, const ComplexEulerAngles& a) {
  return generalized_m(idx, a.parameters());
}

/// generalized_m at n = 0.
Complex associated_m(HalfInt l, HalfInt m, const EulerParameters& p, bool dotted = false);
inline Complex associated_m(HalfInt l, HalfInt m, const ComplexEulerAngles& a,
                            bool dotted = false) {
  return associated_m(l, m, a.parameters(), dotted);
}

/// Z^l_00(theta, tau).
Complex zonal_z(HalfInt l, double theta, double tau, bool dotted = false);

}  // namespace poincare
