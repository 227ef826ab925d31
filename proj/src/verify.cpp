#include "poincare/verify.hpp"

#include "poincare/assembly.hpp"
#include "poincare/photon.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

namespace poincare {

namespace {

const Complex kI(0.0, 1.0);

class Sink {
 public:
  Sink(const SuiteConfig& cfg, std::uint64_t stream) : cfg_(cfg) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed),
                      static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(stream)};
    rng_.seed(seq);
  }

  const SuiteConfig& cfg() const { return cfg_; }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  void add(const std::string& name, NamedValues indices, NamedValues point, double residual,
           double scale, double tolerance, bool flagged = false) {
    records.push_back(make_record(name, std::move(indices), std::move(point), residual, scale,
                                  cfg_.tolerance(name, tolerance), flagged));
  }

  void adopt(const std::string& name, const ResidualRecord& r, double tolerance) {
    add(name, r.indices, r.point, r.residual, r.scale, tolerance, r.flagged);
  }

  std::vector<ResidualRecord> records;

 private:
  const SuiteConfig& cfg_;
  std::mt19937_64 rng_;
};

NamedValues k_values(const WaveVector& k) {
  return {{"k1", k.k()(0)}, {"k2", k.k()(1)}, {"k3", k.k()(2)}};
}

NamedValues r_values(Complex r) { return {{"r_re", r.real()}, {"r_im", r.imag()}}; }

WaveVector random_k(Sink& s) {
  for (;;) {
    const Vector3d k(s.uniform(-2, 2), s.uniform(-2, 2), s.uniform(-2, 2));
    if (k.norm() > 0.1) return WaveVector::make(k);
  }
}

Vector3d random_x(Sink& s) { return {s.uniform(-3, 3), s.uniform(-3, 3), s.uniform(-3, 3)}; }

// Generic point away from theta = 0, pi.
EulerParameters random_angles(Sink& s) {
  EulerParameters p;
  p.phi = s.uniform(0.0, 2.0 * kPi);
  p.epsilon = s.uniform(-0.5, 0.5);
  p.theta = s.uniform(0.3, kPi - 0.3);
  p.tau = s.uniform(-0.8, 0.8);
  p.chi = s.uniform(-2.0 * kPi, 2.0 * kPi);
  p.vareps = s.uniform(-0.5, 0.5);
  return p;
}

Complex random_complex(Sink& s) { return {s.uniform(-1, 1), s.uniform(-1, 1)}; }

int casimir_lmax(const SuiteConfig& cfg) { return std::min(cfg.lmax, 3); }

int sample_count(const SuiteConfig& cfg) { return 4 * cfg.grid; }

HarmonicIndex convergence_index(int l2, bool dotted) {
  return HarmonicIndex::from_twice(l2, l2, l2 >= 2 ? l2 - 2 : -l2, dotted);
}

// ---------------------------------------------------------------- hypergeom

void suite_hypergeom(Sink& s) {
  const auto& cfg = s.cfg();
  struct Example {
    double a, b, c, x, expected;
  };
  for (const Example& e : {Example{0, 2.5, 1.5, 0.7, 1.0}, Example{-1, 1, 1, 0.3, 0.7},
                           Example{-2, -1, 2, 0.5, 1.5}}) {
    const Complex v = terminating_2f1<double>(e.a, e.b, e.c, Complex(e.x));
    s.add("hypergeom.terminating_2f1", {{"a", e.a}, {"b", e.b}, {"c", e.c}}, {{"x", e.x}},
          std::abs(v - e.expected), std::abs(e.expected), 1e-15);
  }
  const auto thetas = theta_grid(cfg.grid);
  const auto taus = tau_grid(cfg.grid);
  for (int l2 = 0; l2 <= 2 * cfg.lmax; ++l2) {
    for (const auto& idx : HarmonicIndex::all_for(HalfInt::from_twice(l2))) {
      const double delta = idx.m == idx.n ? 1.0 : 0.0;
      s.add("hypergeom.identity", index_values(idx), {{"theta", 0.0}, {"tau", 0.0}},
            std::abs(z_sum(idx, 0.0, 0.0) - delta), 0.0, 0.0);
      for (double th : thetas) {
        for (double ta : taus) {
          const Complex a = z_sum(idx, th, ta);
          const Complex b = z_2f1(idx, th, ta);
          s.add("hypergeom.cross_formula", index_values(idx), {{"theta", th}, {"tau", ta}},
                std::abs(a - b), std::abs(a), 1e-10);
        }
      }
    }
    const int dim = l2 + 1;
    for (double th : thetas) {
      Eigen::MatrixXcd z(dim, dim);
      const auto all = HarmonicIndex::all_for(HalfInt::from_twice(l2));
      for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) z(i, j) = z_sum(all[i * dim + j], th, 0.0);
      }
      const double err =
          (z * z.adjoint() - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff();
      s.add("hypergeom.unitarity", {{"l", 0.5 * l2}}, {{"theta", th}, {"tau", 0.0}}, err, 1.0,
            1e-10);
    }
  }
  for (int l = 1; l <= cfg.lmax; ++l) {
    for (int m = -1; m <= 1; ++m) {
      const auto idx = HarmonicIndex::from_twice(2 * l, 2 * m, 0);
      for (double th : thetas) {
        for (double ta : taus) {
          const Complex ref = z_2f1(idx, th, ta);
          s.add("hypergeom.legendre_form", index_values(idx), {{"theta", th}, {"tau", ta}},
                std::abs(section3_z(l, m, th, ta) - ref), std::abs(ref), 1e-10);
        }
      }
    }
  }
}

// ------------------------------------------------------------ factorization

void suite_factorization(Sink& s) {
  const auto& cfg = s.cfg();
  const auto thetas = theta_grid(cfg.grid);
  const auto taus = tau_grid(cfg.grid);
  for (int l2 = 0; l2 <= 2 * cfg.lmax; ++l2) {
    const HalfInt l = HalfInt::from_twice(l2);
    for (const auto& idx : HarmonicIndex::all_for(l)) {
      for (double th : thetas) {
        for (double ta : taus) {
          Complex sum = 0.0;
          for (int k2 = -l2; k2 <= l2; k2 += 2) {
            const HalfInt k = HalfInt::from_twice(k2);
            sum += su2_factor_p(l, idx.m, k, th) * qu2_factor_jacobi(l, k, idx.n, ta);
          }
          const Complex z = z_sum(idx, th, ta);
          s.add("factorization.product_sum", index_values(idx), {{"theta", th}, {"tau", ta}},
                std::abs(sum - z), std::abs(z), 1e-10);
        }
      }
      // The boost factor is the identity at tau = 0 and the rotation factor at theta = 0.
      const double delta = idx.m == idx.n ? 1.0 : 0.0;
      s.add("factorization.jacobi_identity", index_values(idx), {{"tau", 0.0}},
            std::abs(qu2_factor_jacobi(l, idx.m, idx.n, 0.0) - delta), 0.0, 1e-15);
      s.add("factorization.rotation_identity", index_values(idx), {{"theta", 0.0}},
            std::abs(su2_factor_p(l, idx.m, idx.n, 0.0) - delta), 0.0, 1e-15);
    }
  }
}

// ------------------------------------------------------------------ casimir

void suite_casimir(Sink& s) {
  const auto& cfg = s.cfg();
  std::vector<EulerParameters> points;
  for (int i = 0; i < sample_count(cfg); ++i) points.push_back(random_angles(s));
  const FDScheme scheme = FDScheme::standard();
  for (int l2 = 0; l2 <= 2 * casimir_lmax(cfg); ++l2) {
    for (bool dotted : {false, true}) {
      for (const auto& idx : HarmonicIndex::all_for(HalfInt::from_twice(l2), dotted)) {
        for (const auto& p : points) {
          s.adopt(dotted ? "casimir.y2" : "casimir.x2", casimir_x2_residual(idx, p, scheme),
                  1e-6);
        }
      }
    }
  }
  for (int l2 = 1; l2 <= 2 * casimir_lmax(cfg); ++l2) {
    for (bool dotted : {false, true}) {
      const auto idx = convergence_index(l2, dotted);
      const auto e = casimir_convergence(idx, points.front(), 0.02);
      s.add("casimir.convergence_order", index_values(idx), point_values(points.front()),
            std::abs(e.order - 2.0), 0.0, 0.3);
    }
  }
}

// ----------------------------------------------------------------- legendre

void suite_legendre(Sink& s) {
  const auto& cfg = s.cfg();
  std::vector<std::pair<double, double>> points;
  for (int i = 0; i < sample_count(cfg); ++i) {
    const double th = s.uniform(0.3, kPi - 0.3);
    points.emplace_back(th, s.uniform(-0.8, 0.8));
  }
  const FDScheme scheme = FDScheme::standard();
  for (int l2 = 0; l2 <= 2 * casimir_lmax(cfg); ++l2) {
    for (bool dotted : {false, true}) {
      for (const auto& idx : HarmonicIndex::all_for(HalfInt::from_twice(l2), dotted)) {
        for (const auto& [th, ta] : points) {
          s.adopt("legendre.residual", legendre_residual(idx, th, ta, scheme), 1e-6);
        }
      }
    }
  }
  for (int l2 = 1; l2 <= 2 * casimir_lmax(cfg); ++l2) {
    for (bool dotted : {false, true}) {
      const auto idx = convergence_index(l2, dotted);
      const auto [th, ta] = points.front();
      const auto e = legendre_convergence(idx, th, ta, 0.02);
      s.add("legendre.convergence_order", index_values(idx), {{"theta", th}, {"tau", ta}},
            std::abs(e.order - 2.0), 0.0, 0.3);
    }
  }
}

// --------------------------------------------------------------- holomorphy

void suite_holomorphy(Sink& s) {
  const auto& cfg = s.cfg();
  const FDScheme scheme = FDScheme::standard();
  for (int l2 = 0; l2 <= 2 * cfg.lmax; ++l2) {
    for (bool dotted : {false, true}) {
      for (const auto& idx : HarmonicIndex::all_for(HalfInt::from_twice(l2), dotted)) {
        for (double th : theta_grid(cfg.grid, true)) {
          for (double ta : tau_grid(cfg.grid)) {
            s.adopt("holomorphy.cauchy_riemann", holomorphy_residual(idx, th, ta, scheme), 1e-6);
          }
        }
      }
    }
  }
}

// -------------------------------------------------------------------- eigen

void suite_eigen(Sink& s) {
  const double c = s.cfg().c;
  for (int i = 0; i < 1000; ++i) {
    const WaveVector k = random_k(s);
    const double w = c * k.norm();
    const Eigenstructure es = eigenstructure(k, c);
    const PolarizationTriple pol = polarization_vectors(k);
    const Matrix3cd m = curl_matrix(k, c);
    const Vector3d expected(w, -w, 0.0);
    s.add("eigen.eigenvalues", {}, k_values(k), (es.values - expected).cwiseAbs().maxCoeff(), w,
          1e-10);
    double norm_err = 0.0, align = 0.0, vec = 0.0;
    const Helicity hs[3] = {Helicity::Plus, Helicity::Minus, Helicity::Zero};
    for (int j = 0; j < 3; ++j) {
      const Vector3cd& e = pol[hs[j]];
      norm_err = std::max(norm_err, std::abs(e.norm() - 1.0));
      align = std::max(align, std::abs(1.0 - std::abs(es.vectors.col(j).dot(e))));
      vec = std::max(vec, (m * e - expected(j) * e).norm());
    }
    s.add("eigen.unit_norm", {}, k_values(k), norm_err, 1.0, 1e-10);
    s.add("eigen.alignment", {}, k_values(k), align, 1.0, 1e-10);
    s.add("eigen.eigenvector", {}, k_values(k), vec, w, 1e-10);
    const double tr = std::max(transversality_residual(k, Helicity::Plus),
                               transversality_residual(k, Helicity::Minus));
    s.add("eigen.transverse", {}, k_values(k), tr, k.norm(), 1e-10);
  }
  constexpr double kOffset = 1e-6;
  for (double k3 : {1.0, -1.0}) {
    const PolarizationTriple lim = polarization_vectors(WaveVector::make(0.0, 0.0, k3));
    const PolarizationTriple near = polarization_closed_form(WaveVector::make(kOffset, 0.0, k3));
    double d = 0.0;
    for (Helicity h : {Helicity::Plus, Helicity::Minus, Helicity::Zero}) {
      d = std::max(d, (near[h] - lim[h]).norm());
    }
    s.add("eigen.axis_limit", {}, {{"k1", kOffset}, {"k2", 0.0}, {"k3", k3}}, d, 0.0, 1e-5);
  }
}

// ----------------------------------------------------------- transversality

void suite_transversality(Sink& s) {
  for (int i = 0; i < 100; ++i) {
    const WaveVector k = random_k(s);
    s.add("transversality.plus", {{"helicity", 1}}, k_values(k),
          transversality_residual(k, Helicity::Plus), k.norm(), 1e-12);
    s.add("transversality.minus", {{"helicity", -1}}, k_values(k),
          transversality_residual(k, Helicity::Minus), k.norm(), 1e-12);
    s.add("transversality.longitudinal", {{"helicity", 0}}, k_values(k),
          std::abs(transversality_residual(k, Helicity::Zero) - k.norm()), k.norm(), 1e-12);
  }
}

// ------------------------------------------------------------------ maxwell

void suite_maxwell(Sink& s) {
  const double c = s.cfg().c;
  for (int i = 0; i < 100; ++i) {
    const WaveVector k = random_k(s);
    const Vector3d x = random_x(s);
    const double t = s.uniform(-3, 3);
    const double w = c * k.norm();
    NamedValues pt = k_values(k);
    pt.insert(pt.end(), {{"x1", x(0)}, {"x2", x(1)}, {"x3", x(2)}, {"t", t}});

    const PlaneWaveMode plus = helicity_mode(k, Helicity::Plus, c);
    const PlaneWaveMode minus = helicity_mode(k, Helicity::Minus, c);
    s.add("maxwell.me1", {{"helicity", 1}}, pt, dirac_form_residual(plus, DiracEquation::ME1, c),
          w, 1e-12);
    s.add("maxwell.me2", {{"helicity", -1}}, pt,
          dirac_form_residual(minus, DiracEquation::ME2, c), w, 1e-12);
    s.add("maxwell.pairing", {{"helicity", 1}}, pt,
          dirac_form_residual(plus.conjugate(), DiracEquation::ME2, c), w, 1e-12);
    s.add("maxwell.pairing", {{"helicity", -1}}, pt,
          dirac_form_residual(minus.conjugate(), DiracEquation::ME1, c), w, 1e-12);

    for (const auto& [h, mode] : {std::pair{1, plus}, std::pair{-1, minus.conjugate()}}) {
      const DiracField f = DiracField::pair(mode);
      s.add("maxwell.me6", {{"helicity", double(h)}}, pt,
            dirac_form_residual(f, DiracEquation::ME6, c, x, t), w, 1e-12);
      s.add("maxwell.lagrangian", {{"helicity", double(h)}}, pt,
            std::abs(lagrangian_density_translation(f, x, t, c)), w, 1e-12);
      s.add("maxwell.conjugate_equation", {{"helicity", double(h)}}, pt,
            conjugate_equation_residual(f, x, t, c).norm(), w, 1e-12);
    }

    for (Helicity h : {Helicity::Plus, Helicity::Minus}) {
      const MaxwellResiduals r = maxwell_residuals(maxwell_mode(k, h, c), x, t, c);
      const NamedValues hi{{"helicity", double(helicity_value(h))}};
      s.add("maxwell.faraday", hi, pt, r.faraday, w, 1e-12);
      s.add("maxwell.ampere", hi, pt, r.ampere, w, 1e-12);
      s.add("maxwell.gauss_e", hi, pt, r.gauss_e, w, 1e-12);
      s.add("maxwell.gauss_b", hi, pt, r.gauss_b, w, 1e-12);
    }
    // Negative control: the longitudinal mode has |div E + i div B| = |k|.
    const MaxwellResiduals r0 = maxwell_residuals(maxwell_mode(k, Helicity::Zero, c), x, t, c);
    s.add("maxwell.longitudinal_divergence", {{"helicity", 0}}, pt,
          std::abs(std::hypot(r0.gauss_e, r0.gauss_b) - k.norm()), k.norm(), 1e-12);
  }
  for (int i = 0; i < 1000; ++i) {
    FieldPair f;
    f.E = Vector3d(s.uniform(-1, 1), s.uniform(-1, 1), s.uniform(-1, 1));
    f.B = Vector3d(s.uniform(-1, 1), s.uniform(-1, 1), s.uniform(-1, 1));
    const NamedValues pt{{"E1", f.E(0)}, {"E2", f.E(1)}, {"E3", f.E(2)},
                         {"B1", f.B(0)}, {"B2", f.B(1)}, {"B3", f.B(2)}};
    const Vector6cd psi = f.to_six();
    const double expected = 2.0 * (f.E.squaredNorm() + f.B.squaredNorm());
    s.add("maxwell.energy_identity", {}, pt, std::abs(energy_density(psi) - expected), expected,
          1e-12);
    const FieldPair back = FieldPair::from_six(psi);
    s.add("maxwell.field_roundtrip", {}, pt,
          std::max((back.E - f.E).cwiseAbs().maxCoeff(), (back.B - f.B).cwiseAbs().maxCoeff()),
          1.0, 1e-14);
  }
}

// ------------------------------------------------------------------- radial

double radial_scale(const RadialSolution& sol, Complex r) {
  const Complex rs = std::conj(r);
  const double a = radial_coupling(sol.l), ad = radial_coupling(sol.ldot);
  return std::max({std::abs(sol.value(1, r)), a * std::abs(sol.value(0, r)),
                   std::abs(sol.value_dotted(1, rs)), ad * std::abs(sol.value_dotted(0, rs))});
}

void suite_radial(Sink& s) {
  const auto& cfg = s.cfg();
  const bool paper = cfg.variant == RadialVariant::Paper;
  for (int l = 1; l <= std::max(1, cfg.lmax); ++l) {
    const Complex C = random_complex(s), Cdot = random_complex(s);
    const RadialSolution sol = radial_solutions(l, C, Cdot, cfg.variant);
    const RadialSolution printed = radial_solutions(l, C, Cdot, RadialVariant::Paper);
    const NamedValues li{{"l", double(l)}, {"C_re", C.real()}, {"C_im", C.imag()}};
    for (double rho : {0.1, 1.0, 10.0}) {
      for (int j = 0; j < 8; ++j) {
        const Complex r = std::polar(rho, -kPi + kPi / 8.0 + j * kPi / 4.0);
        const auto res = radial_residual(sol, r);
        s.add("radial.residual", li, r_values(r), res.cwiseAbs().maxCoeff(),
              radial_scale(sol, r), 1e-12, paper);
        const auto pr = radial_residual(printed, r);
        const Complex d = paper_radial_discrepancy(l, r);
        const Complex ds = paper_radial_discrepancy(l, std::conj(r));
        s.add("radial.paper_discrepancy", li, r_values(r),
              std::max({std::abs(pr(0) - d), std::abs(pr(1) + d), std::abs(pr(2) - ds),
                        std::abs(pr(3) + ds)}),
              2.0 * l * (l + 1.0) * rho, 1e-12);
        s.add("radial.symmetry", li, r_values(r), std::abs(sol.value(-1, r) - sol.value(1, r)),
              0.0, 0.0);
        const SqrtLinear hom{C, 0.0};
        s.add("radial.homogeneous", li, r_values(r),
              std::abs(2.0 * r * hom.derivative(r) - hom(r)), std::abs(hom(r)), 1e-12);
      }
    }
  }
}

// -------------------------------------------------------------- commutators

double levi_civita(int i, int j, int k) {
  return 0.5 * (i - j) * (j - k) * (k - i);
}

template <typename Mat>
double algebra_error(const std::array<Mat, 3>& a, double sign) {
  double err = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Mat rhs = Mat::Zero();
      for (int k = 0; k < 3; ++k) rhs += sign * kI * levi_civita(i, j, k) * a[k];
      err = std::max(err, (a[i] * a[j] - a[j] * a[i] - rhs).cwiseAbs().maxCoeff());
    }
  }
  return err;
}

void suite_commutators(Sink& s) {
  const auto& cfg = s.cfg();
  const SpinMatrices& sm = spin_matrices();
  double herm = 0.0;
  for (const auto& a : sm.alpha) herm = std::max(herm, (a - a.adjoint()).cwiseAbs().maxCoeff());
  s.add("commutators.alpha_hermitian", {}, {}, herm, 1.0, 1e-15);
  s.add("commutators.alpha_algebra", {{"sign", -1}}, {}, algebra_error(sm.alpha, -1.0), 1.0,
        1e-15);
  const Matrix6cd id6 = Matrix6cd::Identity();
  s.add("commutators.gamma0_square", {}, {},
        (sm.gamma[0] * sm.gamma[0] - id6).cwiseAbs().maxCoeff(), 1.0, 1e-15);
  double anti = 0.0;
  for (int j = 1; j <= 3; ++j) {
    anti = std::max(anti, (sm.gamma[0] * sm.gamma[j] + sm.gamma[j] * sm.gamma[0])
                              .cwiseAbs()
                              .maxCoeff());
  }
  s.add("commutators.gamma_anticommutator", {}, {}, anti, 1.0, 1e-15);

  const LambdaMatrices lm = build_matrices(1.0, cfg.corrected_lambda);
  const bool printed = !cfg.corrected_lambda;
  s.add("commutators.lambda_algebra", {{"sign", 1}}, {}, algebra_error(lm.lambda, 1.0), 1.0,
        1e-14, printed);
  Matrix3cd cas = Matrix3cd::Zero();
  for (const auto& l : lm.lambda) cas += l * l;
  s.add("commutators.lambda_casimir", {{"l", 1}}, {},
        (cas - 2.0 * Matrix3cd::Identity()).cwiseAbs().maxCoeff(), 2.0, 1e-14, printed);
  double blocks = 0.0;
  for (int k = 0; k < 3; ++k) {
    const Matrix6cd& u = lm.upsilon[k];
    blocks = std::max({blocks, u.topLeftCorner<3, 3>().cwiseAbs().maxCoeff(),
                       u.bottomRightCorner<3, 3>().cwiseAbs().maxCoeff(),
                       (lm.upsilon[k + 3] - kI * u).cwiseAbs().maxCoeff()});
  }
  s.add("commutators.upsilon_blocks", {}, {}, blocks, 1.0, 1e-15);

  for (int i = 0; i < 200; ++i) {
    const EulerParameters p1 = random_angles(s), p2 = random_angles(s);
    const SL2CElement g1 = sl2c_from_angles(p1), g2 = sl2c_from_angles(p2);
    const NamedValues pt = point_values(p1);
    s.add("commutators.sl2c_determinant", {}, pt, std::abs(g1.matrix().determinant() - 1.0), 1.0,
          1e-14);
    const Matrix3cd r1 = sl2c_to_complex_rotation(g1), r2 = sl2c_to_complex_rotation(g2);
    const double rn = r1.norm();
    s.add("commutators.complex_orthogonality", {}, pt,
          (r1.transpose() * r1 - Matrix3cd::Identity()).cwiseAbs().maxCoeff(), rn * rn, 1e-13);
    s.add("commutators.homomorphism", {}, pt,
          (sl2c_to_complex_rotation(g1 * g2) - r1 * r2).cwiseAbs().maxCoeff(),
          rn * r2.norm(), 1e-13);
    ComplexSpherePoint z{Vector3cd(random_complex(s), random_complex(s), random_complex(s))};
    ComplexSpherePoint rz{r1 * z.z};
    s.add("commutators.sphere_invariant", {}, pt,
          std::abs(sphere_invariant(rz) - sphere_invariant(z)), rn * rn * z.z.squaredNorm(),
          1e-13);
    double spin = 0.0;
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        const auto idx = HarmonicIndex::from_twice(1, 1 - 2 * a, 1 - 2 * b);
        spin = std::max(spin, std::abs(generalized_m(idx, p1) - g1.matrix()(a, b)));
      }
    }
    s.add("commutators.spin_half", {{"l", 0.5}}, pt, spin, g1.matrix().norm(), 1e-13);
  }
}

// ----------------------------------------------------------------- assembly

void suite_assembly(Sink& s) {
  const auto& cfg = s.cfg();
  const double c = cfg.c;
  const WaveVector k = random_k(s);
  const Complex C = random_complex(s);
  const RadialSolution radial = radial_solutions(1, C, std::conj(C), cfg.variant);
  const SolutionCatalog cat = make_catalog(k, radial, c);

  for (int i = 0; i < 100; ++i) {
    ConfigurationPoint p;
    p.x = random_x(s);
    p.t = s.uniform(-3, 3);
    p.r = std::polar(s.uniform(0.5, 2.0), s.uniform(-3.0, 3.0));
    p.angles = random_angles(s);
    NamedValues pt = point_values(p.angles);
    pt.insert(pt.end(), {{"x1", p.x(0)}, {"x2", p.x(1)}, {"x3", p.x(2)}, {"t", p.t},
                         {"r_re", p.r.real()}, {"r_im", p.r.imag()}});
    for (std::size_t mi = 0; mi < cat.members.size(); ++mi) {
      const auto& m = cat.members[mi];
      const Vector6cd v = m.psi(p);
      const Vector6cd tf = m.psi.translation_factor(p.x, p.t);
      const Complex lf = m.psi.lorentz_factor(p.angles, p.r);
      Eigen::Index j = 0;
      tf.cwiseAbs().maxCoeff(&j);
      if (std::abs(tf(j)) <= 1e-6) continue;
      s.add("assembly.factorization", {{"member", double(mi)}}, pt, std::abs(v(j) / tf(j) - lf),
            std::abs(lf), 1e-12);
    }
  }

  const auto phys = physical_filter(cat);
  const bool exact = phys.size() == 2 && phys[0].name == "psi_1" && phys[1].name == "psi_-1";
  s.add("assembly.physical_filter", {}, {}, exact ? 0.0 : 1.0, 0.0, 0.0);
  int wrong = 0;
  for (const auto& m : cat.members) {
    const bool zero = m.psi.helicity == Helicity::Zero;
    const MemberTag want = zero ? MemberTag::Longitudinal
                                : (m.psi.dotted ? MemberTag::NegativeEnergy : MemberTag::Physical);
    wrong += m.tag != want;
    if (zero) {
      s.add("assembly.longitudinal_evidence", {{"dotted", double(m.psi.dotted)}}, k_values(k),
            std::abs(m.evidence - k.norm()), k.norm(), 1e-12);
    }
  }
  s.add("assembly.tags", {}, {}, double(wrong), 0.0, 0.0);
  for (const auto& m : phys) {
    const Helicity h = m.psi.helicity;
    const auto eq = h == Helicity::Plus ? DiracEquation::ME1 : DiracEquation::ME2;
    s.add("assembly.physical_dirac", {{"helicity", double(helicity_value(h))}}, k_values(k),
          dirac_form_residual(helicity_mode(k, h, c), eq, c), c * k.norm(), 1e-12);
  }

  for (int i = 0; i < 20; ++i) {
    ConfigurationPoint p;
    p.x = random_x(s);
    p.t = s.uniform(-3, 3);
    p.r = s.uniform(0.5, 2.0);
    p.angles.phi = s.uniform(0.0, 2.0 * kPi);
    p.angles.theta = s.uniform(0.0, kPi);
    p.angles.chi = s.uniform(-2.0 * kPi, 2.0 * kPi);
    for (Helicity h : {Helicity::Plus, Helicity::Zero, Helicity::Minus}) {
      const Vector6cd u = assemble(k, h, radial, p, false, c);
      const Vector6cd d = assemble(k, h, radial, p, true, c);
      NamedValues pt = point_values(p.angles);
      pt.emplace_back("r", p.r.real());
      s.add("assembly.conjugation", {{"helicity", double(helicity_value(h))}}, pt,
            (d - u.conjugate()).norm(), u.norm(), 1e-12);
    }
  }

  ConfigurationPoint origin;
  origin.r = 1.5;
  const Vector6cd v = assemble(k, Helicity::Zero, radial, origin, false, c);
  Vector6cd expected;
  const Vector3cd e0 = polarization_vectors(k).eps_zero;
  expected << e0, e0;
  expected *= plane_wave_normalization() * radial.value(0, origin.r);
  s.add("assembly.origin_value", {{"helicity", 0}}, r_values(origin.r), (v - expected).norm(),
        expected.norm(), 1e-15);
}

using SuiteFn = void (*)(Sink&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"hypergeom", suite_hypergeom},       {"factorization", suite_factorization},
      {"casimir", suite_casimir},           {"legendre", suite_legendre},
      {"holomorphy", suite_holomorphy},     {"eigen", suite_eigen},
      {"maxwell", suite_maxwell},           {"transversality", suite_transversality},
      {"radial", suite_radial},             {"commutators", suite_commutators},
      {"assembly", suite_assembly},
  };
  return r;
}

}  // namespace

void SuiteConfig::validate() const {
  if (lmax < 0 || lmax > 6) {
    throw ValidationError("lmax must lie in [0, 6], got " + std::to_string(lmax));
  }
  if (grid < 2 || grid > 200) {
    throw ValidationError("grid must lie in [2, 200], got " + std::to_string(grid));
  }
  require_speed_of_light(c);
  for (const auto& [name, tol] : tolerances) {
    if (!std::isfinite(tol) || tol < 0.0) {
      throw ValidationError("tolerance for " + name + " must be finite and non-negative");
    }
  }
}

double SuiteConfig::tolerance(const std::string& name, double fallback) const {
  if (auto it = tolerances.find(name); it != tolerances.end()) return it->second;
  const auto dot = name.find('.');
  if (dot != std::string::npos) {
    if (auto it = tolerances.find(name.substr(0, dot)); it != tolerances.end()) return it->second;
  }
  return fallback;
}

Summary VerificationReport::summary() const {
  Summary s;
  for (const auto& r : records) {
    if (r.flagged) {
      ++s.flagged;
    } else if (r.passed) {
      ++s.passed;
    } else {
      ++s.failed;
    }
  }
  return s;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

VerificationReport run_suite(const std::string& name, const SuiteConfig& config) {
  config.validate();
  VerificationReport report;
  report.suite = name;
  report.config = config;
  const auto& reg = registry();
  bool found = name == "all";
  for (std::size_t i = 0; i < reg.size(); ++i) {
    if (name != "all" && reg[i].first != name) continue;
    found = true;
    Sink sink(config, i);
    reg[i].second(sink);
    report.records.insert(report.records.end(), sink.records.begin(), sink.records.end());
  }
  if (!found) throw ValidationError("unknown suite '" + name + "'");
  return report;
}

std::vector<double> theta_grid(int n, bool inset_both) {
  if (n < 2) throw ValidationError("grid needs at least 2 points");
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(i * kPi / (n - 1));
  out.back() = kPi - 0.01;
  if (inset_both) out.front() = 0.01;
  return out;
}

std::vector<double> tau_grid(int n) {
  if (n < 2) throw ValidationError("grid needs at least 2 points");
  if (n == 5) return {-1.0, -0.3, 0.0, 0.3, 1.0};
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(-1.0 + 2.0 * i / (n - 1));
  return out;
}

}  // namespace poincare
