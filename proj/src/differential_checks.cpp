#include "poincare/differential_checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace poincare {

namespace {

// Richardson table for a second-order scheme; values[i] computed at step h/2^i.
Complex richardson(const std::vector<Complex>& values) {
  std::vector<Complex> t = values;
  const int n = static_cast<int>(t.size());
  for (int j = 1; j < n; ++j) {
    const double f = std::pow(4.0, j);
    for (int i = n - 1; i >= j; --i) t[i] = (f * t[i] - t[i - 1]) / (f - 1.0);
  }
  return t.back();
}

Complex extrapolate(const std::function<Complex(double)>& op, const FDScheme& scheme) {
  std::vector<Complex> values;
  double h = scheme.step();
  for (int i = 0; i < scheme.richardson_levels(); ++i, h *= 0.5) values.push_back(op(h));
  return richardson(values);
}

Complex theta_c(const EulerParameters& p, bool dotted) {
  return dotted ? p.theta_c_dotted() : p.theta_c();
}

void require_casimir_domain(double theta) {
  if (std::abs(theta) <= kCasimirExclusion || std::abs(theta - kPi) <= kCasimirExclusion) {
    std::ostringstream os;
    os.precision(17);
    os << "theta = " << theta << " inside the exclusion zone of a coordinate singularity";
    throw DomainError(os.str());
  }
}

Complex legendre_z(const HarmonicIndex& idx, double theta, double tau) {
  return std::cos(idx.dotted ? Complex(theta, tau) : Complex(theta, -tau));
}

void require_legendre_domain(const HarmonicIndex& idx, double theta, double tau) {
  const Complex z = legendre_z(idx, theta, tau);
  if (std::abs(1.0 - z * z) <= kLegendreExclusion) {
    std::ostringstream os;
    os.precision(17);
    os << "|1 - z^2| = " << std::abs(1.0 - z * z) << " at theta = " << theta << ", tau = " << tau
       << " is too close to a singular point";
    throw DomainError(os.str());
  }
}

// [X^2 + l(l+1)] M at step h (unscaled).
Complex casimir_operator(const HarmonicIndex& idx, const EulerParameters& p, double h) {
  const auto f = [&](double dphi, double dtheta, double dchi) {
    EulerParameters q = p;
    q.phi += dphi;
    q.theta += dtheta;
    q.chi += dchi;
    return generalized_m(idx, q);
  };
  const Complex f0 = f(0, 0, 0);
  const double h2 = h * h;
  const Complex f_t = (f(0, h, 0) - f(0, -h, 0)) / (2.0 * h);
  const Complex f_tt = (f(0, h, 0) - 2.0 * f0 + f(0, -h, 0)) / h2;
  const Complex f_pp = (f(h, 0, 0) - 2.0 * f0 + f(-h, 0, 0)) / h2;
  const Complex f_cc = (f(0, 0, h) - 2.0 * f0 + f(0, 0, -h)) / h2;
  const Complex f_pc = (f(h, 0, h) - f(h, 0, -h) - f(-h, 0, h) + f(-h, 0, -h)) / (4.0 * h2);
  const Complex tc = theta_c(p, idx.dotted);
  const Complex s = std::sin(tc), c = std::cos(tc);
  const double l = idx.l.value();
  const Complex x2 = f_tt + (c / s) * f_t + (f_pp - 2.0 * c * f_pc + f_cc) / (s * s);
  return x2 + l * (l + 1.0) * f0;
}

Complex legendre_operator(const HarmonicIndex& idx, double theta, double tau, double h) {
  const auto f = [&](double dtheta) { return z_unchecked(idx, theta + dtheta, tau); };
  const Complex f0 = f(0.0);
  const Complex f_t = (f(h) - f(-h)) / (2.0 * h);
  const Complex f_tt = (f(h) - 2.0 * f0 + f(-h)) / (h * h);
  const Complex tc = idx.dotted ? Complex(theta, tau) : Complex(theta, -tau);
  const Complex s = std::sin(tc), z = std::cos(tc);
  const Complex f_z = -f_t / s;
  const Complex f_zz = (f_tt + z * f_z) / (s * s);
  const double l = idx.l.value(), m = idx.m.value(), n = idx.n.value();
  const Complex one_m_z2 = 1.0 - z * z;
  return one_m_z2 * f_zz - 2.0 * z * f_z - (m * m + n * n - 2.0 * m * n * z) / one_m_z2 * f0 +
         l * (l + 1.0) * f0;
}

ResidualRecord casimir_record(const char* name, const HarmonicIndex& idx,
                              const EulerParameters& p, const FDScheme& scheme,
                              double tolerance) {
  require_casimir_domain(p.theta);
  const Complex value = generalized_m(idx, p);
  const Complex r = extrapolate([&](double h) { return casimir_operator(idx, p, h); }, scheme);
  const double mag = std::abs(value);
  const double residual = mag > 0.0 ? std::abs(r) / mag : std::abs(r);
  return make_record(name, index_values(idx), point_values(p), residual, 1.0, tolerance);
}

ConvergenceEstimate estimate(const std::function<double(double)>& residual, double step) {
  ConvergenceEstimate e;
  e.coarse = residual(step);
  e.fine = residual(0.5 * step);
  e.order = (e.coarse > 0.0 && e.fine > 0.0) ? std::log2(e.coarse / e.fine) : 0.0;
  return e;
}

}  // namespace

FDScheme FDScheme::make(double step, int richardson_levels) {
  if (!(step >= kMinStep && step <= kMaxStep)) {
    std::ostringstream os;
    os.precision(17);
    os << "finite-difference step " << step << " outside [1e-6, 1e-1]";
    throw ValidationError(os.str());
  }
  if (richardson_levels < 1 || richardson_levels > kMaxLevels) {
    throw ValidationError("richardson_levels must lie in [1, 4], got " +
                          std::to_string(richardson_levels));
  }
  return FDScheme(step, richardson_levels);
}

ResidualRecord make_record(std::string name, NamedValues indices, NamedValues point,
                           double residual, double scale, double tolerance, bool flagged) {
  ResidualRecord r;
  r.name = std::move(name);
  r.indices = std::move(indices);
  r.point = std::move(point);
  r.residual = residual;
  r.scale = scale;
  r.tolerance = tolerance;
  r.passed = residual <= tolerance * std::max(1.0, scale);
  r.flagged = flagged;
  return r;
}

NamedValues index_values(const HarmonicIndex& idx) {
  NamedValues v{{"l", idx.l.value()}, {"m", idx.m.value()}, {"n", idx.n.value()}};
  if (idx.dotted) v.emplace_back("dotted", 1.0);
  return v;
}

NamedValues point_values(const EulerParameters& p) {
  return {{"phi", p.phi},     {"epsilon", p.epsilon}, {"theta", p.theta},
          {"tau", p.tau},     {"chi", p.chi},         {"vareps", p.vareps}};
}

ResidualRecord casimir_x2_residual(const HarmonicIndex& idx, const EulerParameters& p,
                                   const FDScheme& scheme, double tolerance) {
  return casimir_record(idx.dotted ? "casimir_y2" : "casimir_x2", idx, p, scheme, tolerance);
}

ResidualRecord casimir_y2_residual(const HarmonicIndex& idx, const EulerParameters& p,
                                   const FDScheme& scheme, double tolerance) {
  HarmonicIndex dotted = idx;
  dotted.dotted = true;
  return casimir_record("casimir_y2", dotted, p, scheme, tolerance);
}

ResidualRecord legendre_residual(const HarmonicIndex& idx, double theta, double tau,
                                 const FDScheme& scheme, double tolerance) {
  require_legendre_domain(idx, theta, tau);
  const Complex value = z_unchecked(idx, theta, tau);
  const Complex r =
      extrapolate([&](double h) { return legendre_operator(idx, theta, tau, h); }, scheme);
  const double mag = std::abs(value);
  const double residual = mag > 0.0 ? std::abs(r) / mag : std::abs(r);
  return make_record("legendre", index_values(idx), {{"theta", theta}, {"tau", tau}}, residual,
                     1.0, tolerance);
}

ResidualRecord holomorphy_residual(const HarmonicIndex& idx, double theta, double tau,
                                   const FDScheme& scheme, double tolerance) {
  const auto d_theta = [&](double h) {
    return (z_unchecked(idx, theta + h, tau) - z_unchecked(idx, theta - h, tau)) / (2.0 * h);
  };
  const auto d_tau = [&](double h) {
    return (z_unchecked(idx, theta, tau + h) - z_unchecked(idx, theta, tau - h)) / (2.0 * h);
  };
  const Complex i(0.0, 1.0);
  const Complex sign = idx.dotted ? -i : i;
  const Complex r = extrapolate([&](double h) { return d_tau(h) + sign * d_theta(h); }, scheme);
  const double scale = std::abs(extrapolate(d_theta, scheme));
  return make_record("holomorphy", index_values(idx), {{"theta", theta}, {"tau", tau}},
                     std::abs(r), scale, tolerance, true);
}

ConvergenceEstimate casimir_convergence(const HarmonicIndex& idx, const EulerParameters& p,
                                        double step) {
  require_casimir_domain(p.theta);
  const double mag = std::abs(generalized_m(idx, p));
  return estimate([&](double h) { return std::abs(casimir_operator(idx, p, h)) / mag; }, step);
}

ConvergenceEstimate legendre_convergence(const HarmonicIndex& idx, double theta, double tau,
                                         double step) {
  require_legendre_domain(idx, theta, tau);
  const double mag = std::abs(z_unchecked(idx, theta, tau));
  return estimate(
      [&](double h) { return std::abs(legendre_operator(idx, theta, tau, h)) / mag; }, step);
}

}  // namespace poincare
