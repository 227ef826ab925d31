#pragma once

// Complete solution set psi(alpha) = psi(x) psi(g) on the Poincare group and
// the physical-photon filter.

#include "poincare/lorentz_sector.hpp"
#include "poincare/photon.hpp"

#include <string>
#include <vector>

namespace poincare {

/// Configuration-space point: spacetime (x, t), complex radius r and angles.
struct ConfigurationPoint {
  Vector3d x = Vector3d::Zero();
  double t = 0.0;
  Complex r = 1.0;
  EulerParameters angles;
};

/// Translation factor (plane wave, conjugated when dotted) times the scalar
/// Lorentz factor f_{1,lambda}(r) M^lambda_l; the Lorentz factor multiplies
/// both 3-blocks.
struct PoincareWaveFunction {
  WaveVector k = WaveVector::make(0.0, 0.0, 1.0);
  Helicity helicity = Helicity::Plus;
  RadialSolution radial;
  bool dotted = false;
  double c = 1.0;

  Vector6cd translation_factor(const Vector3d& x, double t) const;
  Complex lorentz_factor(const EulerParameters& angles, Complex r) const;
  Vector6cd operator()(const ConfigurationPoint& p) const;
};

Vector6cd assemble(const WaveVector& k, Helicity h, const RadialSolution& radial,
                   const ConfigurationPoint& p, bool dotted, double c = 1.0);

enum class MemberTag { Physical, NegativeEnergy, Longitudinal };

const char* to_string(MemberTag t);

struct CatalogMember {
  std::string name;
  PoincareWaveFunction psi;
  MemberTag tag = MemberTag::Physical;
  /// |k . eps| for longitudinal members; 0 otherwise.
  double evidence = 0.0;
};

/// psi_1, psi_0, psi_-1, psidot_1, psidot_0, psidot_-1 in that order.
struct SolutionCatalog {
  std::vector<CatalogMember> members;
};

SolutionCatalog make_catalog(const WaveVector& k, const RadialSolution& radial, double c = 1.0);

/// The members tagged Physical: psi_{+1} and psi_{-1}.
std::vector<CatalogMember> physical_filter(const SolutionCatalog& catalog);

}  // namespace poincare
