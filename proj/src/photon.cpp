#include "poincare/photon.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>

namespace poincare {

namespace {

const Complex kI(0.0, 1.0);

Matrix3cd q_dot_alpha(const Vector3d& q) {
  const auto& a = spin_matrices().alpha;
  return q(0) * a[0] + q(1) * a[1] + q(2) * a[2];
}

// Bilinear cross product; Eigen's cross() conjugates complex results.
Vector3cd cross(const Vector3cd& a, const Vector3cd& b) {
  return {a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2), a(0) * b(1) - a(1) * b(0)};
}

void require_nonzero(const WaveVector& k) {
  if (k.norm() == 0.0) throw ValidationError("wave vector k = 0 is degenerate");
}

// Plane-wave derivatives of a Dirac field: d_t and d_j of each block at (x, t).
struct FieldDerivatives {
  Vector6cd value;
  Vector6cd dt;
  std::array<Vector6cd, 3> dx;
};

FieldDerivatives derivatives(const DiracField& psi, const Vector3d& x, double t) {
  FieldDerivatives d;
  const Vector3cd u = psi.upper.value(x, t);
  const Vector3cd v = psi.lower.value(x, t);
  d.value << u, v;
  d.dt << -kI * psi.upper.nu * u, -kI * psi.lower.nu * v;
  for (int j = 0; j < 3; ++j) {
    d.dx[j] << kI * psi.upper.q(j) * u, kI * psi.lower.q(j) * v;
  }
  return d;
}

}  // namespace

const SpinMatrices& spin_matrices() {
  static const SpinMatrices m = [] {
    SpinMatrices s;
    for (int i = 0; i < 3; ++i) {
      s.alpha[i].setZero();
      const int j = (i + 1) % 3, k = (i + 2) % 3;
      s.alpha[i](j, k) = kI;
      s.alpha[i](k, j) = -kI;
    }
    const Matrix3cd id = Matrix3cd::Identity();
    const Matrix3cd zero = Matrix3cd::Zero();
    s.gamma[0] << zero, id, id, zero;
    for (int i = 0; i < 3; ++i) s.gamma[i + 1] << zero, -s.alpha[i], s.alpha[i], zero;
    return s;
  }();
  return m;
}

int alpha_commutator_sign() {
  const auto& a = spin_matrices().alpha;
  const Matrix3cd comm = a[0] * a[1] - a[1] * a[0];
  const Matrix3cd ref = kI * a[2];
  const double proj = (ref.adjoint() * comm).trace().real() / ref.squaredNorm();
  return proj >= 0.0 ? 1 : -1;
}

WaveVector WaveVector::make(const Vector3d& k) {
  if (!k.allFinite()) throw ValidationError("wave vector components must be finite");
  return WaveVector(k);
}

const char* to_string(Helicity h) {
  switch (h) {
    case Helicity::Plus: return "+";
    case Helicity::Zero: return "0";
    case Helicity::Minus: return "-";
  }
  return "?";
}

int helicity_value(Helicity h) {
  return h == Helicity::Plus ? 1 : (h == Helicity::Minus ? -1 : 0);
}

void require_speed_of_light(double c) {
  if (!std::isfinite(c) || c <= 0.0) {
    std::ostringstream os;
    os.precision(17);
    os << "speed of light must be positive and finite, got " << c;
    throw ValidationError(os.str());
  }
}

Matrix3cd curl_matrix(const WaveVector& k, double c) {
  require_speed_of_light(c);
  return -c * q_dot_alpha(k.k());
}

Eigenstructure eigenstructure(const WaveVector& k, double c) {
  require_nonzero(k);
  Eigen::SelfAdjointEigenSolver<Matrix3cd> solver(curl_matrix(k, c));
  // Ascending order: -c|k|, 0, +c|k|.
  const Eigen::Vector3d& ev = solver.eigenvalues();
  const Matrix3cd& vecs = solver.eigenvectors();
  Eigenstructure out;
  out.values << ev(2), ev(0), ev(1);
  out.vectors.col(0) = vecs.col(2);
  out.vectors.col(1) = vecs.col(0);
  out.vectors.col(2) = vecs.col(1);
  return out;
}

const Vector3cd& PolarizationTriple::operator[](Helicity h) const {
  switch (h) {
    case Helicity::Plus: return eps_plus;
    case Helicity::Minus: return eps_minus;
    default: return eps_zero;
  }
}

PolarizationTriple polarization_closed_form(const WaveVector& wk) {
  const Vector3d& k = wk.k();
  const double rho2 = k(0) * k(0) + k(1) * k(1);
  if (rho2 == 0.0) throw ValidationError("closed-form polarization undefined for k1 = k2 = 0");
  const double kn = wk.norm();
  const double norm = 1.0 / std::sqrt(2.0 * kn * kn * rho2);
  PolarizationTriple p;
  p.eps_plus << Complex(-k(0) * k(2), k(1) * kn), Complex(-k(1) * k(2), -k(0) * kn), rho2;
  p.eps_minus << Complex(-k(0) * k(2), -k(1) * kn), Complex(-k(1) * k(2), k(0) * kn), rho2;
  p.eps_plus *= norm;
  p.eps_minus *= norm;
  p.eps_zero = (k / kn).cast<Complex>();
  return p;
}

PolarizationTriple polarization_vectors(const WaveVector& wk) {
  require_nonzero(wk);
  const Vector3d& k = wk.k();
  const double kn2 = k.squaredNorm();
  if (k(0) * k(0) + k(1) * k(1) >= kAxisThreshold * kn2) return polarization_closed_form(wk);
  const double sign = k(2) >= 0.0 ? 1.0 : -1.0;
  const double r = 1.0 / std::sqrt(2.0);
  PolarizationTriple p;
  p.eps_plus << -sign * r, Complex(0.0, -r), 0.0;
  p.eps_minus << -sign * r, Complex(0.0, r), 0.0;
  p.eps_zero << 0.0, 0.0, sign;
  return p;
}

double plane_wave_normalization() { return 1.0 / std::sqrt(2.0 * std::pow(2.0 * kPi, 3)); }

double plane_wave_frequency(const WaveVector& k, Helicity h, double c) {
  require_speed_of_light(c);
  return h == Helicity::Zero ? 0.0 : c * k.norm();
}

Complex PlaneWaveMode::phase(const Vector3d& x, double t) const {
  return std::exp(kI * (q.dot(x) - nu * t));
}

Vector3cd PlaneWaveMode::value(const Vector3d& x, double t) const {
  return amplitude * phase(x, t);
}

PlaneWaveMode PlaneWaveMode::conjugate() const { return {amplitude.conjugate(), -q, -nu}; }

Vector6cd DiracField::value(const Vector3d& x, double t) const {
  Vector6cd v;
  v << upper.value(x, t), lower.value(x, t);
  return v;
}

DiracField DiracField::pair(const PlaneWaveMode& mode) { return {mode, mode.conjugate()}; }

DiracField DiracField::doubled(const PlaneWaveMode& mode) { return {mode, mode}; }

PlaneWaveMode helicity_mode(const WaveVector& k, Helicity h, double c) {
  return {polarization_vectors(k)[h], k.k(), plane_wave_frequency(k, h, c)};
}

DiracField plane_wave_field(const WaveVector& k, Helicity h, double c) {
  PlaneWaveMode mode = helicity_mode(k, h, c);
  mode.amplitude *= plane_wave_normalization();
  return DiracField::doubled(mode);
}

Vector6cd plane_wave(const WaveVector& k, Helicity h, const Vector3d& x, double t, double c) {
  return plane_wave_field(k, h, c).value(x, t);
}

double dirac_form_residual(const PlaneWaveMode& psi, DiracEquation eq, double c) {
  require_speed_of_light(c);
  const Vector3cd a = psi.amplitude;
  const Vector3cd qa = q_dot_alpha(psi.q) * a;
  switch (eq) {
    case DiracEquation::ME1: return ((psi.nu / c) * a + qa).norm();
    case DiracEquation::ME2: return ((psi.nu / c) * a - qa).norm();
    case DiracEquation::ME6: break;
  }
  return dirac_form_residual(DiracField::pair(psi), DiracEquation::ME6, c);
}

double dirac_form_residual(const DiracField& psi, DiracEquation eq, double c, const Vector3d& x,
                           double t) {
  switch (eq) {
    case DiracEquation::ME1:
      return dirac_form_residual(psi.upper, DiracEquation::ME1, c) *
             std::abs(psi.upper.phase(x, t));
    case DiracEquation::ME2:
      return dirac_form_residual(psi.lower, DiracEquation::ME2, c) *
             std::abs(psi.lower.phase(x, t));
    case DiracEquation::ME6: break;
  }
  return (kI * translation_operator(psi, x, t, c)).norm();
}

double transversality_residual(const WaveVector& k, Helicity h) {
  const Vector3cd& e = polarization_vectors(k)[h];
  return std::abs((e.transpose() * k.k().cast<Complex>()).value());
}

FieldPair FieldPair::from_six(const Vector6cd& psi) {
  const Vector3cd u = psi.head<3>(), v = psi.tail<3>();
  return {(0.5 * (u + v)).real(), ((v - u) / (2.0 * kI)).real()};
}

FieldPair FieldPair::from_rs(const Vector3cd& psi) { return {psi.real(), -psi.imag()}; }

Vector6cd FieldPair::to_six() const {
  Vector6cd v;
  v << E.cast<Complex>() - kI * B.cast<Complex>(), E.cast<Complex>() + kI * B.cast<Complex>();
  return v;
}

PlaneWaveMode maxwell_mode(const WaveVector& k, Helicity h, double c) {
  const PlaneWaveMode mode = helicity_mode(k, h, c);
  return h == Helicity::Plus ? mode.conjugate() : mode;
}

double MaxwellResiduals::max() const {
  return std::max(std::max(faraday, ampere), std::max(gauss_e, gauss_b));
}

MaxwellResiduals maxwell_residuals(const PlaneWaveMode& rs, const Vector3d& x, double t,
                                   double c) {
  require_speed_of_light(c);
  const Vector3cd u = rs.value(x, t);
  const Vector3cd iq = kI * rs.q.cast<Complex>();
  const Vector3cd curl = cross(iq, u);
  const Complex div = (iq.transpose() * u).value();
  const Vector3cd dt = -kI * rs.nu * u;
  const Vector3d curl_e = curl.real(), curl_b = -curl.imag();
  const Vector3d dt_e = dt.real(), dt_b = -dt.imag();
  MaxwellResiduals r;
  r.faraday = (curl_e + dt_b / c).norm();
  r.ampere = (curl_b - dt_e / c).norm();
  r.gauss_e = std::abs(div.real());
  r.gauss_b = std::abs(div.imag());
  return r;
}

double energy_density(const Vector6cd& psi) {
  const Matrix6cd& g0 = spin_matrices().gamma[0];
  const Eigen::Matrix<Complex, 1, 6> bar = psi.adjoint() * g0;
  return (bar * g0 * psi).value().real();
}

Vector6cd translation_operator(const DiracField& psi, const Vector3d& x, double t, double c) {
  require_speed_of_light(c);
  const auto& g = spin_matrices().gamma;
  const FieldDerivatives d = derivatives(psi, x, t);
  Vector6cd out = g[0] * d.dt / c;
  for (int j = 0; j < 3; ++j) out -= g[j + 1] * d.dx[j];
  return out;
}

Complex lagrangian_density_translation(const DiracField& psi, const Vector3d& x, double t,
                                       double c) {
  require_speed_of_light(c);
  const auto& g = spin_matrices().gamma;
  const FieldDerivatives d = derivatives(psi, x, t);
  const std::array<double, 4> coeff{1.0 / c, -1.0, -1.0, -1.0};
  const auto bar = [&](const Vector6cd& v) -> Eigen::Matrix<Complex, 1, 6> {
    return v.adjoint() * g[0];
  };
  Complex forward = 0.0, backward = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    const Vector6cd& dpsi = mu == 0 ? d.dt : d.dx[mu - 1];
    forward += coeff[mu] * (bar(d.value) * g[mu] * dpsi).value();
    backward += coeff[mu] * (bar(dpsi) * g[mu] * d.value).value();
  }
  return -0.5 * (forward - backward);
}

Vector6cd conjugate_equation_residual(const DiracField& psi, const Vector3d& x, double t,
                                      double c) {
  require_speed_of_light(c);
  const auto& g = spin_matrices().gamma;
  const FieldDerivatives d = derivatives(psi, x, t);
  const std::array<double, 4> coeff{1.0 / c, -1.0, -1.0, -1.0};
  Vector6cd out = Vector6cd::Zero();
  for (int mu = 0; mu < 4; ++mu) {
    const Vector6cd& dpsi = mu == 0 ? d.dt : d.dx[mu - 1];
    const Vector6cd dbar = g[0].transpose() * dpsi.conjugate();
    out += coeff[mu] * (g[mu].transpose() * dbar);
  }
  return out;
}

}  // namespace poincare
