#include "poincare/lorentz_sector.hpp"

#include <cmath>

namespace poincare {

namespace {

const Complex kI(0.0, 1.0);

Matrix6cd off_diagonal(const Matrix3cd& upper, const Matrix3cd& lower) {
  Matrix6cd m = Matrix6cd::Zero();
  m.topRightCorner<3, 3>() = upper;
  m.bottomLeftCorner<3, 3>() = lower;
  return m;
}

RadialTriple make_triple(int l, Complex C, RadialVariant variant) {
  const double a = radial_coupling(l);
  const double b = variant == RadialVariant::Paper ? a : a * a;
  RadialTriple t;
  t.plus = {C, b};
  t.zero = {0.0, a};
  t.minus = t.plus;
  return t;
}

}  // namespace

LambdaMatrices build_matrices(Complex c11, bool corrected) {
  if (c11 == Complex(0.0)) throw ValidationError("c11 must be nonzero");
  const double r = 1.0 / std::sqrt(2.0);
  LambdaMatrices m;
  m.corrected = corrected;
  if (corrected) {
    m.lambda[0] << 0, 1, 0, 1, 0, 1, 0, 1, 0;
  } else {
    m.lambda[0] << 0, 1, 0, 1, 0, 0, 0, 1, 0;
  }
  m.lambda[0] *= c11 * r;
  m.lambda[1] << 0, -kI, 0, kI, 0, -kI, 0, kI, 0;
  m.lambda[1] *= c11 * r;
  m.lambda[2] << 1, 0, 0, 0, 0, 0, 0, 0, -1;
  m.lambda[2] *= c11;
  for (int k = 0; k < 3; ++k) {
    const Matrix3cd& l = m.lambda[k];
    m.upsilon[k] = off_diagonal(l.conjugate(), l);
    m.upsilon[k + 3] = off_diagonal(kI * l.conjugate(), kI * l);
  }
  return m;
}

int lambda_commutator_sign(const LambdaMatrices& m) {
  const Matrix3cd comm = m.lambda[0] * m.lambda[1] - m.lambda[1] * m.lambda[0];
  const Matrix3cd ref = kI * m.lambda[2];
  return (ref.adjoint() * comm).trace().real() >= 0.0 ? 1 : -1;
}

const char* to_string(RadialVariant v) {
  return v == RadialVariant::Paper ? "paper" : "corrected";
}

Complex SqrtLinear::operator()(Complex w) const { return a * std::sqrt(w) + b * w; }

Complex SqrtLinear::derivative(Complex w) const {
  if (a == Complex(0.0)) return b;
  return a / (2.0 * std::sqrt(w)) + b;
}

const SqrtLinear& RadialTriple::operator[](int q) const {
  switch (q) {
    case 1: return plus;
    case 0: return zero;
    case -1: return minus;
  }
  throw ValidationError("radial component index must be -1, 0 or 1, got " + std::to_string(q));
}

double radial_coupling(int l) { return std::sqrt(2.0 * l * (l + 1.0)); }

RadialSolution radial_solutions(int l, Complex C, Complex Cdot, RadialVariant variant,
                                int ldot) {
  if (ldot < 0) ldot = l;
  if (l < 1) throw ValidationError("radial solutions need l >= 1, got " + std::to_string(l));
  if (ldot < 1) {
    throw ValidationError("radial solutions need ldot >= 1, got " + std::to_string(ldot));
  }
  RadialSolution s;
  s.l = l;
  s.ldot = ldot;
  s.C = C;
  s.Cdot = Cdot;
  s.variant = variant;
  s.f = make_triple(l, C, variant);
  s.fdot = make_triple(ldot, Cdot, variant);
  return s;
}

Eigen::Matrix<Complex, 4, 1> radial_residual(int l, int ldot, const RadialTriple& f,
                                             const RadialTriple& fdot, Complex r) {
  if (r == Complex(0.0)) throw DomainError("radial system is singular at r = 0");
  const double a = radial_coupling(l), ad = radial_coupling(ldot);
  const Complex rs = std::conj(r);
  Eigen::Matrix<Complex, 4, 1> out;
  out(0) = 2.0 * r * f.plus.derivative(r) - f.plus(r) - a * f.zero(r);
  out(1) = -2.0 * r * f.minus.derivative(r) + f.minus(r) + a * f.zero(r);
  out(2) = 2.0 * rs * fdot.plus.derivative(rs) - fdot.plus(rs) - ad * fdot.zero(rs);
  out(3) = -2.0 * rs * fdot.minus.derivative(rs) + fdot.minus(rs) + ad * fdot.zero(rs);
  return out;
}

Eigen::Matrix<Complex, 4, 1> radial_residual(const RadialSolution& s, Complex r) {
  return radial_residual(s.l, s.ldot, s.f, s.fdot, r);
}

Complex paper_radial_discrepancy(int l, Complex r) {
  const double a = radial_coupling(l);
  return (a - a * a) * r;
}

Complex lorentz_factor(const RadialSolution& radial, int q, const EulerParameters& angles,
                       Complex r, bool dotted) {
  const int l = dotted ? radial.ldot : radial.l;
  EulerParameters p = angles;
  p.chi = 0.0;
  p.vareps = 0.0;
  if (q == 0) {
    p.phi = 0.0;
    p.epsilon = 0.0;
  }
  const Complex m = associated_m(HalfInt::from_twice(2 * l), HalfInt::from_twice(2 * q), p, dotted);
  const Complex f = dotted ? radial.value_dotted(q, std::conj(r)) : radial.value(q, r);
  return f * m;
}

SeparatedPsi separated_psi(const RadialSolution& radial, const EulerParameters& angles,
                           Complex r) {
  SeparatedPsi s;
  for (int i = 0; i < 3; ++i) {
    const int q = 1 - i;
    s.psi[i] = lorentz_factor(radial, q, angles, r, false);
    s.psi_dotted[i] = lorentz_factor(radial, q, angles, r, true);
  }
  return s;
}

}  // namespace poincare
