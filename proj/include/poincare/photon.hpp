#pragma once

// Translation-sector photon in Dirac form: alpha/Gamma matrices, the curl
// eigenproblem, polarization vectors, plane waves and field-equation residuals.
//
// Units: hbar = 1; the speed of light c is a parameter (default 1).
//
// Helicity assignment (fixed by the eigen-decomposition of curl_matrix):
//   curl_matrix(k) eps_+ = +c|k| eps_+,  curl_matrix(k) eps_- = -c|k| eps_-.
// With omega = +c|k| the eps_+ wave therefore solves ME1 and the eps_- wave
// solves ME2; the complex conjugate of either solves the other equation.

#include "poincare/types.hpp"

#include <array>

namespace poincare {

/// alpha_i with (alpha_i)_jk = i eps_ijk, and the 6x6 Gamma_mu.
struct SpinMatrices {
  std::array<Matrix3cd, 3> alpha;
  std::array<Matrix6cd, 4> gamma;
};

const SpinMatrices& spin_matrices();

/// Sign s in [alpha_i, alpha_j] = s i eps_ijk alpha_k, measured from the matrices.
int alpha_commutator_sign();

class WaveVector {
 public:
  /// Throws ValidationError for non-finite components.
  static WaveVector make(const Vector3d& k);
  static WaveVector make(double k1, double k2, double k3) { return make(Vector3d(k1, k2, k3)); }

  const Vector3d& k() const { return k_; }
  double norm() const { return k_.norm(); }

 private:
  explicit WaveVector(const Vector3d& k) : k_(k) {}
  Vector3d k_;
};

enum class Helicity { Plus, Zero, Minus };

const char* to_string(Helicity h);
/// +1, 0, -1.
int helicity_value(Helicity h);

/// Speed of light must be finite and positive; throws ValidationError otherwise.
void require_speed_of_light(double c);

/// -c (k . alpha); Hermitian, acting as v -> i c (k x v).
Matrix3cd curl_matrix(const WaveVector& k, double c = 1.0);

/// Eigenpairs ordered (+c|k|, -c|k|, 0); columns of `vectors` are unit eigenvectors.
struct Eigenstructure {
  Vector3d values;
  Matrix3cd vectors;
};

/// Throws ValidationError when |k| = 0.
Eigenstructure eigenstructure(const WaveVector& k, double c = 1.0);

struct PolarizationTriple {
  Vector3cd eps_plus;
  Vector3cd eps_minus;
  Vector3cd eps_zero;

  const Vector3cd& operator[](Helicity h) const;
};

/// k1^2 + k2^2 below this fraction of |k|^2 selects the on-axis limit.
inline constexpr double kAxisThreshold = 1e-12;

/// Closed-form polarization vectors; on the k3 axis the k2 = 0, k1 -> 0+ limit
/// eps_+- = (-sign k3, -+i, 0)/sqrt(2), eps_0 = (0, 0, sign k3).
/// Throws ValidationError when |k| = 0.
PolarizationTriple polarization_vectors(const WaveVector& k);

/// The closed form alone, without the on-axis branch. Throws ValidationError
/// when k1 = k2 = 0.
PolarizationTriple polarization_closed_form(const WaveVector& k);

/// Normalization {2 (2 pi)^3}^{-1/2}.
double plane_wave_normalization();

/// Frequency carried by the displayed plane waves: c|k| for +-, 0 for the
/// longitudinal mode.
double plane_wave_frequency(const WaveVector& k, Helicity h, double c = 1.0);

/// A exp[i (q.x - nu t)].
struct PlaneWaveMode {
  Vector3cd amplitude = Vector3cd::Zero();
  Vector3d q = Vector3d::Zero();
  double nu = 0.0;

  Complex phase(const Vector3d& x, double t) const;
  Vector3cd value(const Vector3d& x, double t) const;
  /// Complex conjugate mode: conj(A) exp[-i (q.x - nu t)].
  PlaneWaveMode conjugate() const;
};

/// Six-component field (upper; lower), each block a plane-wave mode.
struct DiracField {
  PlaneWaveMode upper;
  PlaneWaveMode lower;

  Vector6cd value(const Vector3d& x, double t) const;
  /// (mode; conj(mode)), the pairing written as (psi; psi*).
  static DiracField pair(const PlaneWaveMode& mode);
  /// Both blocks equal to `mode`, as in the displayed plane waves.
  static DiracField doubled(const PlaneWaveMode& mode);
};

/// Mode eps_lambda exp[i (k.x - omega t)] without normalization.
PlaneWaveMode helicity_mode(const WaveVector& k, Helicity h, double c = 1.0);

/// Normalized displayed plane wave N (eps; eps) exp[i (k.x - omega t)].
DiracField plane_wave_field(const WaveVector& k, Helicity h, double c = 1.0);
Vector6cd plane_wave(const WaveVector& k, Helicity h, const Vector3d& x, double t,
                     double c = 1.0);

enum class DiracEquation { ME1, ME2, ME6 };

/// |(i/c) d_t psi -+ i alpha.grad psi| with exact plane-wave derivatives at (x, t).
/// ME1 acts on the upper block, ME2 on the lower block; ME6 applies the 6x6
/// operator, whose lower row is ME1 on the upper block and upper row ME2 on
/// the lower block.
double dirac_form_residual(const DiracField& psi, DiracEquation eq, double c = 1.0,
                           const Vector3d& x = Vector3d::Zero(), double t = 0.0);
/// ME1/ME2 on a single mode; ME6 on the pair (mode; conj(mode)).
double dirac_form_residual(const PlaneWaveMode& psi, DiracEquation eq, double c = 1.0);

/// |k . eps_lambda| (bilinear).
double transversality_residual(const WaveVector& k, Helicity h);

/// Real fields with psi_upper = E - iB, psi_lower = E + iB.
struct FieldPair {
  Vector3d E = Vector3d::Zero();
  Vector3d B = Vector3d::Zero();

  static FieldPair from_six(const Vector6cd& psi);
  /// From a single Riemann-Silberstein value psi = E - iB.
  static FieldPair from_rs(const Vector3cd& psi);
  Vector6cd to_six() const;
};

/// The E - iB mode of helicity h solving (i/c) d_t psi = -curl psi: the mode
/// itself for eps_- and eps_0, its conjugate for eps_+.
PlaneWaveMode maxwell_mode(const WaveVector& k, Helicity h, double c = 1.0);

/// |curl E + (1/c) d_t B|, |curl B - (1/c) d_t E|, |div E|, |div B| for
/// E = Re u, B = -Im u of a mode u, with exact derivatives.
struct MaxwellResiduals {
  double faraday = 0.0;
  double ampere = 0.0;
  double gauss_e = 0.0;
  double gauss_b = 0.0;

  double max() const;
};

MaxwellResiduals maxwell_residuals(const PlaneWaveMode& rs, const Vector3d& x, double t,
                                   double c = 1.0);

/// psi-bar Gamma_0 psi with psi-bar = psi^dagger Gamma_0.
double energy_density(const Vector6cd& psi);

/// -(1/2)(psi-bar Gamma_mu d_mu psi - d_mu psi-bar Gamma_mu psi) for the
/// translation operator D = Gamma_0 (1/c) d_t - Gamma_j d_j (the Dirac-form
/// operator is i D).
Complex lagrangian_density_translation(const DiracField& psi, const Vector3d& x, double t,
                                       double c = 1.0);

/// D psi at (x, t).
Vector6cd translation_operator(const DiracField& psi, const Vector3d& x, double t,
                               double c = 1.0);

/// Residual vector of Gamma_mu^T d_mu psi-bar for psi-bar built from psi.
Vector6cd conjugate_equation_residual(const DiracField& psi, const Vector3d& x, double t,
                                      double c = 1.0);

}  // namespace poincare
