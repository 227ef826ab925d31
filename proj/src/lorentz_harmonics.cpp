#include "poincare/lorentz_harmonics.hpp"

#include <cmath>
#include <sstream>

namespace poincare {

namespace {

double fact(int n) { return factorial<double>(n); }

// (a + b)/2 for two twice-stored values of the same integerness class.
int half_sum(int a2, int b2) { return (a2 + b2) / 2; }

void require_index(HalfInt l, HalfInt m, const char* name) {
  if (l.twice() < 0 || l.twice() > kMaxTwiceL) {
    throw ValidationError("l = " + to_string(l) + " outside [0, " +
                          to_string(HalfInt::from_twice(kMaxTwiceL)) + "]");
  }
  if (std::abs(m.twice()) > l.twice()) {
    throw ValidationError(std::string("|") + name + "| = |" + to_string(m) + "| exceeds l = " +
                          to_string(l));
  }
  if ((l.twice() - m.twice()) % 2 != 0) {
    throw ValidationError(std::string("l - ") + name + " must be an integer (l = " + to_string(l) +
                          ", " + name + " = " + to_string(m) + ")");
  }
}

void require_point(double theta, double tau) {
  if (!std::isfinite(theta) || theta < 0.0 || theta > kPi) {
    std::ostringstream os;
    os.precision(17);
    os << "theta = " << theta << " outside [0, pi]";
    throw ValidationError(os.str());
  }
  if (!std::isfinite(tau)) throw ValidationError("tau must be finite");
}

// sqrt((l-a)!(l+a)!(l-b)!(l+b)!), all arguments integral.
double root_weight(int l2, int a2, int b2) {
  return std::sqrt(fact(half_sum(l2, -a2)) * fact(half_sum(l2, a2)) * fact(half_sum(l2, -b2)) *
                   fact(half_sum(l2, b2)));
}

// Sum over j of sign^j * x^e * y^(2l - e) / (j! (l-m-j)! (l+k-j)! (m-k+j)!), e = m - k + 2j,
// with the root weight folded into each term so the diagonal is exact.
double half_sum_term(int l2, int m2, int k2, double x, double y, double sign) {
  const int lm = half_sum(l2, -m2);
  const int lk = half_sum(l2, k2);
  const int mk = half_sum(m2, -k2);
  const double w = root_weight(l2, m2, k2);
  const int j_lo = std::max(0, -mk);
  const int j_hi = std::min(lm, lk);
  double sum = 0.0;
  for (int j = j_lo; j <= j_hi; ++j) {
    const int e = mk + 2 * j;
    const double coeff = w / (fact(j) * fact(lm - j) * fact(lk - j) * fact(mk + j));
    const double s = (j % 2 == 0) ? 1.0 : sign;
    sum += s * coeff * std::pow(x, e) * std::pow(y, l2 - e);
  }
  return sum;
}

double z_part_2f1(int l2, int a2, int k2, double x, double y, double x_sign) {
  const double l = 0.5 * l2, a = 0.5 * a2, k = 0.5 * k2;
  const int ak = half_sum(a2, -k2);
  const RegularizedSeries<double> f = regularized_2f1(a - l, -l - k, a - k + 1.0);
  if (f.coefficient == 0.0) return 0.0;
  const double pre = root_weight(l2, a2, k2) * f.coefficient /
                     (fact(half_sum(l2, -a2)) * fact(half_sum(l2, k2)));
  // cos^{2l} tan^{ak} (x_sign tan^2)^{power + j} in sin/cos powers.
  double sum = 0.0;
  for (std::size_t j = 0; j < f.terms.size(); ++j) {
    const int q = f.power + static_cast<int>(j);
    const int e = ak + 2 * q;
    const double s = (q % 2 == 0) ? 1.0 : x_sign;
    sum += s * f.terms[j] * std::pow(x, e) * std::pow(y, l2 - e);
  }
  return pre * sum;
}

Complex maybe_conj(Complex v, bool dotted) { return dotted ? std::conj(v) : v; }

Complex z_sum_raw(const HarmonicIndex& idx, double theta, double tau) {
  const int l2 = idx.l.twice(), m2 = idx.m.twice(), n2 = idx.n.twice();
  const double s = std::sin(0.5 * theta), c = std::cos(0.5 * theta);
  const double sh = std::sinh(0.5 * tau), ch = std::cosh(0.5 * tau);
  const int lm = half_sum(l2, -m2), ln = half_sum(l2, -n2);
  Complex total = 0.0;
  for (int k2 = -l2; k2 <= l2; k2 += 2) {
    const int lk = half_sum(l2, k2), mk = half_sum(m2, -k2), nk = half_sum(n2, -k2);
    const double w_theta = root_weight(l2, m2, k2), w_tau = root_weight(l2, n2, k2);
    double sum = 0.0;
    for (int j = std::max(0, -mk); j <= std::min(lm, lk); ++j) {
      const int e = mk + 2 * j;
      const double a = (j % 2 == 0 ? 1.0 : -1.0) * w_theta /
                       (fact(j) * fact(lm - j) * fact(lk - j) * fact(mk + j)) *
                       std::pow(s, e) * std::pow(c, l2 - e);
      for (int q = std::max(0, -nk); q <= std::min(ln, lk); ++q) {
        const int f = nk + 2 * q;
        sum += a * (w_tau / (fact(q) * fact(ln - q) * fact(lk - q) * fact(nk + q)) *
                    std::pow(sh, f) * std::pow(ch, l2 - f));
      }
    }
    total += i_power<double>(mk) * sum;
  }
  return maybe_conj(total, idx.dotted);
}

}  // namespace

HalfInt HalfInt::from_double(double v) {
  const double twice = std::round(2.0 * v);
  if (!std::isfinite(v) || std::abs(2.0 * v - twice) > 1e-9) {
    std::ostringstream os;
    os.precision(17);
    os << v << " is not an integer or half-integer";
    throw ValidationError(os.str());
  }
  return HalfInt(static_cast<int>(twice));
}

std::string to_string(HalfInt h) {
  if (h.is_integer()) return std::to_string(h.twice() / 2);
  return std::to_string(h.twice()) + "/2";
}

HarmonicIndex HarmonicIndex::from_twice(int l2, int m2, int n2, bool dotted) {
  const HalfInt l = HalfInt::from_twice(l2), m = HalfInt::from_twice(m2),
                n = HalfInt::from_twice(n2);
  require_index(l, m, "m");
  require_index(l, n, "n");
  return {l, m, n, dotted};
}

HarmonicIndex HarmonicIndex::make(double l, double m, double n, bool dotted) {
  return from_twice(HalfInt::from_double(l).twice(), HalfInt::from_double(m).twice(),
                    HalfInt::from_double(n).twice(), dotted);
}

std::vector<HarmonicIndex> HarmonicIndex::all_for(HalfInt l, bool dotted) {
  std::vector<HarmonicIndex> out;
  for (int m2 = l.twice(); m2 >= -l.twice(); m2 -= 2) {
    for (int n2 = l.twice(); n2 >= -l.twice(); n2 -= 2) {
      out.push_back(from_twice(l.twice(), m2, n2, dotted));
    }
  }
  return out;
}

Complex su2_factor_p(HalfInt l, HalfInt m, HalfInt k, double theta) {
  require_index(l, m, "m");
  require_index(l, k, "k");
  const double s = std::sin(0.5 * theta), c = std::cos(0.5 * theta);
  const double v = half_sum_term(l.twice(), m.twice(), k.twice(), s, c, -1.0);
  return i_power<double>(half_sum(m.twice(), -k.twice())) * v;
}

double qu2_factor_jacobi(HalfInt l, HalfInt k, HalfInt n, double tau) {
  require_index(l, k, "k");
  require_index(l, n, "n");
  const double sh = std::sinh(0.5 * tau), ch = std::cosh(0.5 * tau);
  // The summation is symmetric under renaming (m, k) -> (n, k).
  return half_sum_term(l.twice(), n.twice(), k.twice(), sh, ch, 1.0);
}

Complex z_unchecked(const HarmonicIndex& idx, double theta, double tau) {
  return z_sum_raw(idx, theta, tau);
}

Complex z_sum(const HarmonicIndex& idx, double theta, double tau) {
  require_point(theta, tau);
  return z_sum_raw(idx, theta, tau);
}

Complex z_2f1(const HarmonicIndex& idx, double theta, double tau) {
  require_point(theta, tau);
  const int l2 = idx.l.twice(), m2 = idx.m.twice(), n2 = idx.n.twice();
  const double s = std::sin(0.5 * theta), c = std::cos(0.5 * theta);
  const double sh = std::sinh(0.5 * tau), ch = std::cosh(0.5 * tau);
  Complex total = 0.0;
  for (int k2 = -l2; k2 <= l2; k2 += 2) {
    const double q = z_part_2f1(l2, n2, k2, sh, ch, 1.0);
    if (q == 0.0) continue;
    const double p = z_part_2f1(l2, m2, k2, s, c, -1.0);
    total += i_power<double>(half_sum(m2, -k2)) * (p * q);
  }
  return maybe_conj(total, idx.dotted);
}

Complex section3_z(int l, int m, double theta, double tau) {
  if (l < 1) throw ValidationError("section3_z needs integer l >= 1");
  if (m < -1 || m > 1) throw ValidationError("section3_z needs m in {-1, 0, 1}");
  require_point(theta, tau);
  const Complex tc(theta, -tau);
  const Complex z = std::cos(tc);
  // P_l and P_l' by the three-term recurrences.
  Complex p_prev = 1.0, p = z, dp_prev = 0.0, dp = 1.0;
  for (int k = 1; k < l; ++k) {
    const Complex p_next = (double(2 * k + 1) * z * p - double(k) * p_prev) / double(k + 1);
    const Complex dp_next = dp_prev + double(2 * k + 1) * p;
    p_prev = p;
    p = p_next;
    dp_prev = dp;
    dp = dp_next;
  }
  if (m == 0) return p;
  return Complex(0.0, 1.0) * std::sin(tc) * dp / std::sqrt(double(l) * double(l + 1));
}

Complex generalized_m(const HarmonicIndex& idx, const EulerParameters& p) {
  const HarmonicIndex plain{idx.l, idx.m, idx.n, false};
  const Complex z = z_unchecked(plain, p.theta, p.tau);
  const double m = idx.m.value(), n = idx.n.value();
  const Complex v = std::exp(-m * Complex(p.epsilon, p.phi)) * z *
                    std::exp(-n * Complex(p.vareps, p.chi));
  return maybe_conj(v, idx.dotted);
}

Complex associated_m(HalfInt l, HalfInt m, const EulerParameters& p, bool dotted) {
  if (!l.is_integer()) throw ValidationError("associated functions need integer l");
  return generalized_m(HarmonicIndex::from_twice(l.twice(), m.twice(), 0, dotted), p);
}

Complex zonal_z(HalfInt l, double theta, double tau, bool dotted) {
  if (!l.is_integer()) throw ValidationError("zonal functions need integer l");
  return z_sum(HarmonicIndex::from_twice(l.twice(), 0, 0, dotted), theta, tau);
}

}  // namespace poincare
