#pragma once

// Verification suites: each suite samples one module's identities and returns
// a flat, deterministically ordered list of residual records.

#include "poincare/differential_checks.hpp"
#include "poincare/lorentz_sector.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace poincare {

struct SuiteConfig {
  int lmax = 4;
  /// Points per axis of the (theta, tau) grid.
  int grid = 5;
  /// Overrides keyed by record name ("maxwell.faraday") or suite ("maxwell").
  std::map<std::string, double> tolerances;
  std::uint64_t seed = 42;
  double c = 1.0;
  RadialVariant variant = RadialVariant::Corrected;
  bool corrected_lambda = true;

  /// Throws ValidationError on lmax outside [0, 6], grid < 2, bad c or a
  /// negative / non-finite tolerance.
  void validate() const;
  /// Exact name first, then the suite prefix, then `fallback`.
  double tolerance(const std::string& name, double fallback) const;
};

struct Summary {
  int passed = 0;
  int failed = 0;
  int flagged = 0;
};

struct VerificationReport {
  std::string suite;
  SuiteConfig config;
  std::vector<ResidualRecord> records;

  /// Flagged records are counted only under `flagged`.
  Summary summary() const;
  /// True when no unflagged record failed.
  bool ok() const { return summary().failed == 0; }
};

/// hypergeom, factorization, casimir, legendre, holomorphy, eigen, maxwell,
/// transversality, radial, commutators, assembly.
const std::vector<std::string>& suite_names();

/// `name` is one of suite_names() or "all". Throws ValidationError otherwise.
VerificationReport run_suite(const std::string& name, const SuiteConfig& config);

/// theta nodes in [0, pi] with the last one inset by 0.01; `inset_both` also
/// moves the first one to 0.01.
std::vector<double> theta_grid(int n, bool inset_both = false);
/// tau nodes in [-1, 1]; the 5-point grid is {-1, -0.3, 0, 0.3, 1}.
std::vector<double> tau_grid(int n);

}  // namespace poincare
