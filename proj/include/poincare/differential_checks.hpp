#pragma once

// Finite-difference residuals of the Casimir eigenvalue equations and of the
// complex Legendre equation, with Richardson extrapolation.

#include "poincare/lorentz_harmonics.hpp"

#include <string>
#include <utility>
#include <vector>

namespace poincare {

/// Central-difference step and number of Richardson levels (step halvings).
class FDScheme {
 public:
  static constexpr double kMinStep = 1e-6;
  static constexpr double kMaxStep = 1e-1;
  static constexpr int kMaxLevels = 4;

  /// Throws ValidationError outside step in [1e-6, 1e-1], levels in [1, 4].
  static FDScheme make(double step, int richardson_levels);
  /// step 1e-3, 2 levels.
  static FDScheme standard() { return make(1e-3, 2); }

  double step() const { return step_; }
  int richardson_levels() const { return levels_; }

 private:
  FDScheme(double step, int levels) : step_(step), levels_(levels) {}
  double step_;
  int levels_;
};

using NamedValues = std::vector<std::pair<std::string, double>>;

/// One named residual. Invariant: passed == (residual <= tolerance * max(1, scale)).
struct ResidualRecord {
  std::string name;
  NamedValues indices;
  NamedValues point;
  double residual = 0.0;
  double scale = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  bool flagged = false;
};

ResidualRecord make_record(std::string name, NamedValues indices, NamedValues point,
                           double residual, double scale, double tolerance,
                           bool flagged = false);

NamedValues index_values(const HarmonicIndex& idx);
NamedValues point_values(const EulerParameters& p);

/// Exclusion half-width around theta = 0 and theta = pi.
inline constexpr double kCasimirExclusion = 0.1;
/// Minimum |1 - z^2| for the Legendre operator.
inline constexpr double kLegendreExclusion = 1e-3;

/// |[X^2 + l(l+1)] M| / |M| with X^2 in the complex angles; for a dotted
/// index the Y^2 operator in the conjugate angles with eigenvalue ldot(ldot+1).
/// Throws DomainError within kCasimirExclusion of theta = 0 or pi.
ResidualRecord casimir_x2_residual(const HarmonicIndex& idx, const EulerParameters& p,
                                   const FDScheme& scheme, double tolerance = 1e-6);
ResidualRecord casimir_y2_residual(const HarmonicIndex& idx, const EulerParameters& p,
                                   const FDScheme& scheme, double tolerance = 1e-6);

/// Relative residual of the complex Legendre operator applied to Z at
/// z = cos(theta -+ i tau). Throws DomainError when |1 - z^2| <= 1e-3.
ResidualRecord legendre_residual(const HarmonicIndex& idx, double theta, double tau,
                                 const FDScheme& scheme, double tolerance = 1e-6);

/// |dZ/dtau + i dZ/dtheta| (dZ/dtau - i dZ/dtheta for dotted) with scale |dZ/dtheta|.
/// Reported as a flagged record.
ResidualRecord holomorphy_residual(const HarmonicIndex& idx, double theta, double tau,
                                   const FDScheme& scheme, double tolerance = 1e-6);

/// Unextrapolated residuals at step h and h/2 and the observed order
/// log2(r(h) / r(h/2)).
struct ConvergenceEstimate {
  double coarse = 0.0;
  double fine = 0.0;
  double order = 0.0;
};

ConvergenceEstimate casimir_convergence(const HarmonicIndex& idx, const EulerParameters& p,
                                        double step);
ConvergenceEstimate legendre_convergence(const HarmonicIndex& idx, double theta, double tau,
                                         double step);

}  // namespace poincare
