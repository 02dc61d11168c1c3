#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "legendre.hpp"
#include "quadrature.hpp"

namespace sphmean {

enum class Regime { Vanishing, Interior, Exterior, BoundaryLower, BoundaryUpper };

inline const char* regime_name(Regime r) {
  switch (r) {
    case Regime::Vanishing: return "Vanishing";
    case Regime::Interior: return "Interior";
    case Regime::Exterior: return "Exterior";
    case Regime::BoundaryLower: return "BoundaryLower";
    case Regime::BoundaryUpper: return "BoundaryUpper";
  }
  return "?";
}

inline Regime classify_regime(double t, double x, double z) {
  if (!(t > 0 && x > 0 && z > 0)) throw DomainError("classify_regime: t, x, z must be positive");
  const double d = std::fabs(x - z), s = x + z;
  if (t < d) return Regime::Vanishing;
  if (t == d) return Regime::BoundaryLower;
  if (t < s) return Regime::Interior;
  if (t == s) return Regime::BoundaryUpper;
  return Regime::Exterior;
}

// Geometry of (t, x, z).  a = t^2 - (x-z)^2 and b = (x+z)^2 - t^2 are kept in
// factored form so that points close to a surface keep their relative accuracy.
struct KernelPoint {
  double t = 0, x = 0, z = 0;
  double a = 0, b = 0;
  Regime regime = Regime::Interior;

  KernelPoint() = default;
  KernelPoint(double t_, double x_, double z_) : t(t_), x(x_), z(z_) {
    regime = classify_regime(t, x, z);
    const double d = std::fabs(x - z), s = x + z;
    a = (t - d) * (t + d);
    b = (s - t) * (s + t);
  }
  // a and b supplied by a caller that knows the gaps more accurately
  static KernelPoint with_gaps(double t, double x, double z, double a, double b) {
    KernelPoint k;
    k.t = t;
    k.x = x;
    k.z = z;
    k.a = a;
    k.b = b;
    if (!(t > 0 && x > 0 && z > 0)) throw DomainError("KernelPoint: t, x, z must be positive");
    if (a < 0) k.regime = Regime::Vanishing;
    else if (a == 0) k.regime = Regime::BoundaryLower;
    else if (b > 0) k.regime = Regime::Interior;
    else if (b == 0) k.regime = Regime::BoundaryUpper;
    else k.regime = Regime::Exterior;
    return k;
  }
  double two_xz() const { return 2 * x * z; }
  double cos_v() const { return (x * x + z * z - t * t) / two_xz(); }
  double cosh_u() const { return (t * t - x * x - z * z) / two_xz(); }
  bool on_surface() const { return regime == Regime::BoundaryLower || regime == Regime::BoundaryUpper; }
};

namespace detail {

constexpr double kSqrt2Pi = 2.5066282746310005024;

// 2^lam Gamma(lam+1)/sqrt(2 pi) (xz)^{beta-1} t^{-2 lam}: the factor shared by both branches
inline double kernel_prefactor(const Params& p, const KernelPoint& k) {
  const double lam = p.alpha + p.beta;
  return std::exp(lam * std::log(2.0) + std::lgamma(lam + 1) - std::log(kSqrt2Pi) +
                  (p.beta - 1) * std::log(k.x * k.z) - 2 * lam * std::log(k.t));
}

}  // namespace detail

inline double kernel_legendre(const Params& p, const KernelPoint& k) {
  if (k.on_surface()) throw SingularSurfaceError("kernel evaluated on a singular surface");
  if (k.regime == Regime::Vanishing) return 0.0;
  const double lam = p.alpha + p.beta;
  const double w = k.two_xz();
  if (k.regime == Regime::Interior) {
    // a + b = 4xz, so the larger gap is recovered from the smaller one
    double omy = k.a / w, opy = k.b / w;  // 1 - cos v, 1 + cos v
    if (omy <= opy) opy = 2.0 - omy;
    else omy = 2.0 - opy;
    if (!(omy > 0 && opy > 0)) throw SingularSurfaceError("point numerically on a singular surface");
    const double y = (omy <= opy) ? 1.0 - omy : opy - 1.0;
    const double sin_v = std::sqrt(omy) * std::sqrt(opy);
    return detail::kernel_prefactor(p, k) * std::pow(sin_v, lam - 0.5) * ferrers_p_split(p, y, omy, opy);
  }
  const double rg = gamma_reciprocal(p.beta);
  if (rg == 0.0) return 0.0;
  const double c = -k.b;
  const double ymo = c / w, ypo = ymo + 2.0;  // cosh u - 1, cosh u + 1
  if (!(ymo > 0)) throw SingularSurfaceError("point numerically on a singular surface");
  const double y = (ymo <= 1.0) ? 1.0 + ymo : ypo - 1.0;
  const double sinh_u = std::sqrt(ymo) * std::sqrt(ypo);
  return detail::kernel_prefactor(p, k) * 2.0 * rg * std::pow(sinh_u, lam - 0.5) * olver_q_split(p, y, ymo, ypo);
}

inline double kernel_legendre(const Params& p, double t, double x, double z) {
  return kernel_legendre(p, KernelPoint(t, x, z));
}

struct ExceptionalMembership {
  bool in_E_P = false;
  bool in_E_Q = false;
  std::optional<std::string> explicit_line;
};

inline ExceptionalMembership exceptional_membership(const Params& p) {
  ExceptionalMembership m;
  const ExceptionalSets e = exceptional_sets(p);
  m.in_E_P = e.in_E_P;
  m.in_E_Q = e.in_E_Q;
  if (p.beta_nonpositive_integer()) m.explicit_line = "beta_nonpositive_integer";
  else if (p.two_alpha_plus_beta_zero) m.explicit_line = "two_alpha_plus_beta_zero";
  else if (p.alpha_half_integer()) m.explicit_line = "alpha_half_integer";
  return m;
}

// Closed forms on the explicit lines, written directly in t, x, z.
inline std::optional<double> kernel_closed_form(const Params& p, const KernelPoint& k) {
  const ExceptionalMembership m = exceptional_membership(p);
  if (!m.explicit_line) return std::nullopt;
  if (k.on_surface()) throw SingularSurfaceError("kernel evaluated on a singular surface");
  if (k.regime == Regime::Vanishing) return 0.0;
  const double a = p.alpha, b = p.beta, lam = a + b;
  const double t = k.t, xz = k.x * k.z, w = 2 * xz;
  const double A = k.a, B = k.b, C = -k.b;
  const bool interior = k.regime == Regime::Interior;
  const double sqrtpi = detail::kSqrtPi;

  if (p.beta_nonpositive_integer()) {
    if (!interior) return 0.0;
    const long n = -*p.beta_exact_integer;
    if (n == 0)
      return std::tgamma(a + 1) / (sqrtpi * std::pow(2.0, 2 * a - 1)) * gamma_reciprocal(a + 0.5) *
             std::pow(t * xz, -2 * a) * std::pow(A * B, a - 0.5);
    const double g = a - n - 0.5;
    const double S2 = A * B / (w * w);
    const double cv = (A <= B) ? 1.0 - A / w : B / w - 1.0;
    return std::pow(2.0, lam) * std::tgamma(lam + 1) / detail::kSqrt2Pi * std::pow(xz, -n - 1.0) *
           std::pow(t, -2 * lam) * std::pow(2.0, n - a + 0.5) * detail::factorial(n) * gamma_reciprocal(a + 0.5) *
           std::pow(S2, g) * jacobi_poly(static_cast<int>(n), g, g, cv);
  }
  if (p.two_alpha_plus_beta_zero) {
    if (interior)
      return std::pow(2.0, 2 * a + 1) * std::tgamma(1 - a) / sqrtpi * gamma_reciprocal(0.5 - a) * std::pow(t, 2 * a) *
             std::pow(A * B, -a - 0.5);
    return 2 * std::tgamma(1 - a) * gamma_reciprocal(-2 * a) * gamma_reciprocal(a + 1) * std::pow(t, 2 * a) *
           std::pow(A * C, -a - 0.5);
  }
  const long n = *p.alpha_exact_half_integer;
  if (n == -1) {
    const double c0 = std::tgamma(b + 0.5) / sqrtpi * gamma_reciprocal(b) * std::pow(t, 1 - 2 * b);
    return interior ? c0 * std::pow(A, b - 1) : c0 * (std::pow(A, b - 1) + std::pow(C, b - 1));
  }
  const double pre = std::pow(2.0, lam) * std::tgamma(lam + 1) / detail::kSqrt2Pi * std::pow(xz, b - 1) * std::pow(t, -2 * lam);
  const int ni = static_cast<int>(n);
  if (interior) {
    const double cv = (A <= B) ? 1.0 - A / w : B / w - 1.0;
    return pre * detail::factorial(n) * gamma_reciprocal(2.0 * n + b + 1) * std::pow(A / w, n + b) *
           jacobi_poly(ni, n + b, -n - b, cv);
  }
  const double chu = (C <= w) ? 1.0 + C / w : A / w - 1.0;
  const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
  return pre * sgn * detail::factorial(n) * gamma_reciprocal(2.0 * n + b + 1) *
         (std::pow(A / w, n + b) * jacobi_poly(ni, -n - b, n + b, chu) -
          std::pow(C / w, n + b) * jacobi_poly(ni, n + b, -n - b, chu));
}

inline std::optional<double> kernel_closed_form(const Params& p, double t, double x, double z) {
  return kernel_closed_form(p, KernelPoint(t, x, z));
}

namespace detail {

// Hankel amplitude H = P + iQ with J_nu(s) = sqrt(2/(pi s)) Re[H e^{i(s - phi)}]
inline std::complex<double> hankel_amplitude(double nu, double s) {
  double P, Q;
  if (!bessel_hankel_pq(nu, s, P, Q))
    throw ConvergenceError("Hankel expansion not accurate at the tail cutoff", 1.0);
  return {P, Q};
}

}  // namespace detail

// Direct evaluation of the triple-Bessel integral defining the kernel.
inline double kernel_oracle_quadrature(const Params& p, const KernelPoint& k, const QuadSpec& spec) {
  spec.validate();
  if (k.on_surface()) throw SingularSurfaceError("kernel evaluated on a singular surface");
  const double al = p.alpha, lam = p.alpha + p.beta;
  const double t = k.t, x = k.x, z = k.z;
  const double norm = std::exp(lam * std::log(2.0) + std::lgamma(lam + 1));
  const double big = std::max({t, x, z, 1.0}), small = std::min({t, x, z});
  const double numax = std::max(std::fabs(al), std::fabs(lam));
  const double S = std::max(35.0, 2 * numax * numax);
  const double Y0 = std::max(40.0 / big, S / small);

  auto F = [&](double y) {
    return bessel_j_scaled(lam, t * y) * bessel_j_scaled(al, x * y) * bessel_j_scaled(al, z * y) *
           std::pow(y, 2 * al + 1);
  };
  const double fast = t + x + z;
  const double half = M_PI / fast;
  const double rel = 0.05 * spec.tol;
  const double abs_floor = 1e-15;

  const double y1 = std::min(half, Y0);
  std::vector<double> br;
  for (double y = y1; y < Y0; y += half) br.push_back(y);
  br.push_back(Y0);
  // magnitude scale, so that kernels which vanish identically still meet an absolute target
  double mag = 0;
  {
    auto A = [&](double y, double dy, double) { return y == 0 ? 0.0 : std::fabs(F(dy)); };
    auto Fa = [&](double y) { return std::fabs(F(y)); };
    mag += quad::tanh_sinh(A, 0.0, y1, 0, 1e-2).value;
    if (br.size() >= 2) mag += quad::gauss_kronrod(Fa, br, 0, 1e-2, spec.max_panels).value;
  }
  const double mag_abs = std::max(abs_floor * 0.1, 0.25 * rel * mag);
  QuadResult head;
  {
    auto G = [&](double y, double dy, double) { return y == 0 ? 0.0 : F(dy); };
    head += quad::tanh_sinh(G, 0.0, y1, mag_abs, rel);
    if (br.size() >= 2) head += quad::gauss_kronrod(F, br, mag_abs, rel, spec.max_panels);
  }

  // four single-frequency terms of the asymptotic product beyond Y0
  const double ph_t = (lam / 2 + 0.25) * M_PI, ph_x = (al / 2 + 0.25) * M_PI;
  struct Term {
    double omega, phase;
    int sx, sz;
  };
  const Term terms[4] = {{t + x + z, ph_t + 2 * ph_x, 1, 1},
                         {t + x - z, ph_t, 1, -1},
                         {t - x + z, ph_t, -1, 1},
                         {t - x - z, ph_t - 2 * ph_x, -1, -1}};
  const double amp0 = std::pow(2.0 / M_PI, 1.5) * std::pow(t, -lam - 0.5) * std::pow(x * z, -al - 0.5) / 4;
  const double tail_abs = std::max(mag_abs, 0.25 * rel * std::fabs(head.value));
  QuadResult tail;
  for (const Term& tm : terms) {
    if (tm.omega == 0) throw SingularSurfaceError("oracle: zero frequency");
    auto g = [&](double y) {
      std::complex<double> Ht = detail::hankel_amplitude(lam, t * y);
      std::complex<double> Hx = detail::hankel_amplitude(al, x * y);
      std::complex<double> Hz = detail::hankel_amplitude(al, z * y);
      if (tm.sx < 0) Hx = std::conj(Hx);
      if (tm.sz < 0) Hz = std::conj(Hz);
      const std::complex<double> G = Ht * Hx * Hz;
      const double ph = tm.omega * y - tm.phase;
      return amp0 * std::pow(y, -lam - 0.5) * (G.real() * std::cos(ph) - G.imag() * std::sin(ph));
    };
    const double hp = M_PI / std::fabs(tm.omega);
    auto piece = [&](int i) {
      const double lo = Y0 + i * hp, hi = lo + hp;
      return quad::gauss_kronrod(g, lo, hi, 0.01 * tail_abs, 1e-14, 50);
    };
    tail += quad::sum_alternating(piece, tail_abs, rel, 20000);
  }
  const double value = norm * (head.value + tail.value);
  const double err = norm * (head.error + tail.error);
  if (!head.converged || !tail.converged || !std::isfinite(value))
    throw ConvergenceError("kernel oracle did not converge", err);
  return value;
}

inline double kernel_oracle_quadrature(const Params& p, double t, double x, double z, const QuadSpec& spec) {
  return kernel_oracle_quadrature(p, KernelPoint(t, x, z), spec);
}

// ---------------------------------------------------------------- zeros

struct ZeroCount {
  int predicted = 0;           // exact count, or 1 with at_least
  bool predicted_at_least = false;
  int observed = 0;
  std::vector<double> locations;
  bool inconclusive = false;
};

inline ZeroCount predicted_zeros(const Params& p, LegendreFunction which) {
  ZeroCount zc;
  const ExactReal al = p.alpha_x(), be = p.beta_x();
  const ExactReal half(rat(1, 2)), mhalf(rat(-1, 2)), zero(rat(0)), one(rat(1));
  const ExactReal m2a = ExactReal(rat(-2)) * al;
  if (which == LegendreFunction::FerrersP) {
    const bool free = (compare(al, mhalf) >= 0 && compare(be, zero) >= 0) ||
                      (compare(al, mhalf) < 0 && compare(be, m2a) >= 0) ||
                      (compare(al, half) <= 0 && compare(be, zero) < 0);
    zc.predicted = free ? 0 : 1;
    zc.predicted_at_least = !free;
  } else {
    const bool one_zero = compare(al, mhalf) < 0 && compare(be, one) > 0 && compare(be, m2a) < 0;
    zc.predicted = one_zero ? 1 : 0;
  }
  return zc;
}

namespace detail {

// f given as f(gap) on the geometric side, bisect between two sign-different gaps
template <class F>
double bisect_gap(F& f, double lo, double hi) {
  double flo = f(lo);
  for (int i = 0; i < 200; ++i) {
    const double mid = (lo > 0 && hi / lo > 4) ? std::sqrt(lo * hi) : 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) break;
    const double fm = f(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

inline ZeroCount count_legendre_zeros(const Params& p, LegendreFunction which, const QuadSpec& spec = {}) {
  (void)spec;
  ZeroCount zc = predicted_zeros(p, which);
  std::vector<double> gaps;  // scan abscissae, each paired with an evaluator
  auto scan = [&](auto&& f, const std::vector<double>& pts, auto&& to_y) {
    double prev = 0;
    bool have = false;
    double prev_pt = 0;
    for (double s : pts) {
      double v;
      try {
        v = f(s);
      } catch (const std::exception&) {
        continue;
      }
      if (std::isnan(v)) {
        zc.inconclusive = true;
        continue;
      }  // an overflowed endpoint value still carries its sign
      if (v == 0) continue;
      if (have && ((v < 0) != (prev < 0))) {
        ++zc.observed;
        zc.locations.push_back(to_y(detail::bisect_gap(f, prev_pt, s)));
      }
      prev = v;
      prev_pt = s;
      have = true;
    }
  };
  if (which == LegendreFunction::FerrersP) {
    // parametrise by s = 1 + y in (0, 2); dense geometric refinement at both ends
    std::vector<double> pts;
    for (int k = 1000; k >= 1; --k) pts.push_back(std::pow(10.0, -0.3 * k));  // 1e-300 .. ~0.5
    for (int i = 1; i < 800; ++i) {
      const double s = 2.0 * i / 800;
      if (s > pts.back()) pts.push_back(s);
    }
    for (int k = 1; k <= 1000; ++k) {
      const double s = 2.0 - std::pow(10.0, -0.3 * k);
      if (s > pts.back() && s < 2.0) pts.push_back(s);
    }
    auto f = [&](double s) {
      const double y = s - 1.0;
      return ferrers_p_split(p, y, s <= 1.0 ? 2.0 - s : 1.0 - y, s);
    };
    scan(f, pts, [](double s) { return s - 1.0; });
  } else {
    // parametrise by g = y - 1 on the scan 2^k * 1e-4
    std::vector<double> pts;
    for (int k = -990; k <= 300; ++k) pts.push_back(std::ldexp(1e-4, k));
    auto f = [&](double g) { return olver_q_split(p, 1.0 + g, g, 2.0 + g); };
    scan(f, pts, [](double g) { return 1.0 + g; });
  }
  return zc;
}

}  // namespace sphmean
