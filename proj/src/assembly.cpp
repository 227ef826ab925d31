#include "poincare/assembly.hpp"

namespace poincare {

Vector6cd PoincareWaveFunction::translation_factor(const Vector3d& x, double t) const {
  const Vector6cd v = plane_wave(k, helicity, x, t, c);
  return dotted ? Vector6cd(v.conjugate()) : v;
}

Complex PoincareWaveFunction::lorentz_factor(const EulerParameters& angles, Complex r) const {
  return poincare::lorentz_factor(radial, helicity_value(helicity), angles, r, dotted);
}

Vector6cd PoincareWaveFunction::operator()(const ConfigurationPoint& p) const {
  return translation_factor(p.x, p.t) * lorentz_factor(p.angles, p.r);
}

Vector6cd assemble(const WaveVector& k, Helicity h, const RadialSolution& radial,
                   const ConfigurationPoint& p, bool dotted, double c) {
  return PoincareWaveFunction{k, h, radial, dotted, c}(p);
}

const char* to_string(MemberTag t) {
  switch (t) {
    case MemberTag::Physical: return "physical";
    case MemberTag::NegativeEnergy: return "negative-energy";
    case MemberTag::Longitudinal: return "excluded-by-transversality";
  }
  return "?";
}

SolutionCatalog make_catalog(const WaveVector& k, const RadialSolution& radial, double c) {
  SolutionCatalog cat;
  for (bool dotted : {false, true}) {
    for (Helicity h : {Helicity::Plus, Helicity::Zero, Helicity::Minus}) {
      CatalogMember m;
      m.name = std::string(dotted ? "psidot_" : "psi_") + std::to_string(helicity_value(h));
      m.psi = PoincareWaveFunction{k, h, radial, dotted, c};
      if (h == Helicity::Zero) {
        m.tag = MemberTag::Longitudinal;
        m.evidence = transversality_residual(k, h);
      } else {
        m.tag = dotted ? MemberTag::NegativeEnergy : MemberTag::Physical;
      }
      cat.members.push_back(std::move(m));
    }
  }
  return cat;
}

std::vector<CatalogMember> physical_filter(const SolutionCatalog& catalog) {
  std::vector<CatalogMember> out;
  for (const auto& m : catalog.members) {
    if (m.tag == MemberTag::Physical) out.push_back(m);
  }
  return out;
}

}  // namespace poincare
