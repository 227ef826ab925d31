#pragma once

// SL(2,C) sector of the (1,0)+(0,1) field: Lambda/Upsilon matrices, the l = 1
// radial system on the complex two-sphere and the separated solutions.

#include "poincare/lorentz_harmonics.hpp"

#include <array>

namespace poincare {

/// Lambda_1..3 (3x3) and Upsilon_1..6 (6x6).
struct LambdaMatrices {
  std::array<Matrix3cd, 3> lambda;
  std::array<Matrix6cd, 6> upsilon;
  bool corrected = true;
};

/// corrected = false reproduces the printed arrays, whose Lambda_1 has rows
/// (0,1,0), (1,0,0), (0,1,0); corrected = true uses the spin-1 form with a
/// symmetric Lambda_1. Upsilon_k = [[0, conj(L_k)], [L_k, 0]],
/// Upsilon_{k+3} = [[0, i conj(L_k)], [i L_k, 0]].
/// Throws ValidationError for c11 = 0.
LambdaMatrices build_matrices(Complex c11 = 1.0, bool corrected = true);

/// Sign s in [L_i, L_j] = s i eps_ijk L_k for corrected matrices with c11 = 1.
int lambda_commutator_sign(const LambdaMatrices& m);

enum class RadialVariant { Paper, Corrected };

const char* to_string(RadialVariant v);

/// f(w) = a sqrt(w) + b w, principal branch (cut along the negative real axis).
struct SqrtLinear {
  Complex a = 0.0;
  Complex b = 0.0;

  Complex operator()(Complex w) const;
  Complex derivative(Complex w) const;
};

/// f_{1,+1}, f_{1,0}, f_{1,-1}.
struct RadialTriple {
  SqrtLinear plus;
  SqrtLinear zero;
  SqrtLinear minus;

  const SqrtLinear& operator[](int q) const;
};

/// Radial functions for the undotted pair over r and the dotted pair over r*.
/// Paper:     f_{1,+-1} = C sqrt(r) + sqrt(2l(l+1)) r,  f_{1,0} = sqrt(2l(l+1)) r.
/// Corrected: f_{1,+-1} = C sqrt(r) + 2l(l+1) r,        f_{1,0} = sqrt(2l(l+1)) r.
struct RadialSolution {
  int l = 1;
  int ldot = 1;
  Complex C = 0.0;
  Complex Cdot = 0.0;
  RadialVariant variant = RadialVariant::Corrected;
  RadialTriple f;
  RadialTriple fdot;

  /// f^l_{1,q}(r), q in {-1, 0, 1}.
  Complex value(int q, Complex r) const { return f[q](r); }
  /// f^ldot_{1,q}(r*), evaluated at the argument given.
  Complex value_dotted(int q, Complex rstar) const { return fdot[q](rstar); }
};

/// Throws ValidationError for l < 1 or ldot < 1.
RadialSolution radial_solutions(int l, Complex C, Complex Cdot, RadialVariant variant,
                                int ldot = -1);

/// sqrt(2 l (l+1)).
double radial_coupling(int l);

/// The four first-order equations multiplied through by r (and r*):
///   R1 = 2r f'_{+1} - f_{+1} - a f_0,   R2 = -2r f'_{-1} + f_{-1} + a f_0,
///   R3, R4 the dotted analogues at r* = conj(r) with a = sqrt(2 ldot (ldot+1)).
/// Throws DomainError at r = 0.
Eigen::Matrix<Complex, 4, 1> radial_residual(int l, int ldot, const RadialTriple& f,
                                             const RadialTriple& fdot, Complex r);
Eigen::Matrix<Complex, 4, 1> radial_residual(const RadialSolution& s, Complex r);

/// (sqrt(2l(l+1)) - 2l(l+1)) r, the first residual left by the printed solution.
Complex paper_radial_discrepancy(int l, Complex r);

/// (psi_1, psi_2, psi_3) and the dotted triple.
struct SeparatedPsi {
  std::array<Complex, 3> psi;
  std::array<Complex, 3> psi_dotted;
};

/// psi_1 = f_{1,1}(r) M^{+1}(phi,eps,theta,tau,0,0), psi_2 = f_{1,0}(r) Z^l_00(theta,tau),
/// psi_3 = f_{1,-1}(r) M^{-1}(phi,eps,theta,tau,0,0); dotted at r* with the
/// conjugate series. chi and vareps of `angles` are ignored.
SeparatedPsi separated_psi(const RadialSolution& radial, const EulerParameters& angles,
                           Complex r);

/// Lorentz factor f_{1,q}(r) M^q_l of one separated component; dotted uses
/// ldot, r* = conj(r) and the conjugate series.
Complex lorentz_factor(const RadialSolution& radial, int q, const EulerParameters& angles,
                       Complex r, bool dotted);

}  // namespace poincare
