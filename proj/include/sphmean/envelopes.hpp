#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "kernel.hpp"

namespace sphmean {

struct EnvelopeValue {
  double value = 0.0;  // >= 0, possibly +inf
  bool sharp = false;
  bool sign_suppressible = false;
  int sign = 1;  // factor making the kernel nonnegative where sign_suppressible
};

namespace detail {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

// ---------------------------------------------------------------- I and J

inline double int_I_envelope(double alpha, double gamma, double B) {
  if (!(alpha > -0.5)) throw DomainError("int_I: alpha must exceed -1/2");
  if (!(B >= 0 && B <= 1)) throw DomainError("int_I: B must lie in [0,1]");
  const double e = alpha + gamma + 0.5;
  if (e < 0) return B == 1 ? detail::kInf : std::pow(1 - B, e);
  if (e == 0) return B == 1 ? detail::kInf : 1 + std::log(1 / (1 - B));
  return 1.0;
}

inline double int_I_oracle(double alpha, double gamma, double B, const QuadSpec& spec = {}) {
  if (!(alpha > -0.5)) throw DomainError("int_I: alpha must exceed -1/2");
  if (!(B >= 0 && B <= 1)) throw DomainError("int_I: B must lie in [0,1]");
  if (B == 1 && alpha + gamma + 0.5 <= 0) return detail::kInf;
  // s in (-1,1); da = 1+s, db = 1-s, so 1-Bs = (1-B) + B db
  auto f = [&](double, double da, double db) {
    return std::pow((1 - B) + B * db, gamma) * std::pow(da * db, alpha - 0.5);
  };
  return require(quad::tanh_sinh(f, -1.0, 1.0, 0.0, spec.tol, 12), "int_I_oracle");
}

inline double int_J_envelope(double alpha, double beta, double gamma, double D) {
  if (!(beta > 0) || !(gamma > -1) || !(D >= 1)) throw DomainError("int_J: parameters out of range");
  if (D >= 2) return std::pow(D, alpha - 0.5);
  const double lam = alpha + beta;
  if (lam < 0.5) return D == 1 ? detail::kInf : std::pow(D - 1, lam - 0.5);
  if (lam == 0.5) return D == 1 ? detail::kInf : 1 + std::log(1 / (D - 1));
  return 1.0;
}

inline double int_J_oracle(double alpha, double beta, double gamma, double D, const QuadSpec& spec = {}) {
  if (!(beta > 0) || !(gamma > -1) || !(D >= 1)) throw DomainError("int_J: parameters out of range");
  if (D == 1 && alpha + beta <= 0.5) return detail::kInf;
  auto f = [&](double, double da, double db) {
    return std::pow((D - 1) + db, alpha - 0.5) * std::pow(db, beta - 1) * std::pow(da, gamma);
  };
  return require(quad::tanh_sinh(f, 0.0, 1.0, 0.0, spec.tol, 12), "int_J_oracle");
}

// int_0^A w^gamma (1-w)^delta dw up to constants; +inf marks divergence (gamma <= -1)
inline double lemma_a(double gamma, double delta, double A, double C) {
  if (!(A > 0 && A < 1) || !(C > 0 && C < 1)) throw DomainError("lemma_a: A and C must lie in (0,1)");
  if (gamma <= -1) return detail::kInf;
  if (A <= C) return std::pow(A, gamma + 1);
  if (delta > -1) return 1.0;
  if (delta == -1) return std::log(1 / (1 - A));
  return std::pow(1 - A, delta + 1);
}

inline double lemma_a_oracle(double gamma, double delta, double A, const QuadSpec& spec = {}) {
  if (gamma <= -1) return detail::kInf;
  auto f = [&](double w, double da, double) { return std::pow(da, gamma) * std::pow(1 - w, delta); };
  return require(quad::tanh_sinh(f, 0.0, A, 0.0, spec.tol, 12), "lemma_a_oracle");
}

// ---------------------------------------------------------------- pointwise

struct EnvelopeOptions {
  double epsilon = 0.1;  // width of the near-surface sharpness tubes, in units of sqrt(xz)
};

namespace detail {

inline bool lt(const ExactReal& a, const ExactReal& b) { return compare(a, b) < 0; }
inline bool gt(const ExactReal& a, const ExactReal& b) { return compare(a, b) > 0; }

// neither [alpha > 1/2 and beta < 0] nor [alpha < -1/2 and beta < -2 alpha]
inline bool interior_globally_sharp(const Params& p) {
  const ExactReal al = p.alpha_x(), be = p.beta_x();
  const ExactReal h(rat(1, 2)), mh(rat(-1, 2)), z(rat(0));
  return !(gt(al, h) && lt(be, z)) && !(lt(al, mh) && lt(be, ExactReal(rat(-2)) * al));
}

// not 1 < beta < -2 alpha
inline bool exterior_globally_sharp(const Params& p) {
  const ExactReal al = p.alpha_x(), be = p.beta_x();
  return !(gt(be, ExactReal(rat(1))) && lt(be, ExactReal(rat(-2)) * al));
}

inline int floor_beta_wedge_zero_sign(const Params& p) {
  const double b = std::min(p.beta, 0.0);
  long f;
  if (p.beta_x().exact) f = static_cast<long>(floor_rat(std::min(*p.beta_x().exact, Rational(0))));
  else f = static_cast<long>(std::floor(b));
  return (f % 2 == 0) ? 1 : -1;
}

inline bool in_tube(const KernelPoint& k, double eps) {
  const double r = std::sqrt(k.x * k.z);
  const double d = std::fabs(k.x - k.z), s = k.x + k.z;
  return std::fabs(k.t - d) < eps * r || std::fabs(k.t - s) < eps * r || k.t > r / eps;
}

}  // namespace detail

inline EnvelopeValue pointwise_envelope(const Params& p, const KernelPoint& k, const EnvelopeOptions& opt = {}) {
  if (k.on_surface()) throw SingularSurfaceError("envelope evaluated on a singular surface");
  EnvelopeValue e;
  if (k.regime == Regime::Vanishing) {
    e.value = 0;
    e.sharp = true;
    e.sign_suppressible = true;
    return e;
  }
  const double al = p.alpha, lam = p.alpha + p.beta, xz = k.x * k.z;
  const int s = p.sum_vs_half();
  const bool tube = detail::in_tube(k, opt.epsilon);
  if (k.regime == Regime::Interior) {
    double v = std::pow(xz, -al - 0.5) * std::pow(k.t, -2 * lam) * std::pow(k.a, lam - 0.5);
    const double q = k.b / xz;
    if (p.beta_nonpositive_integer() || p.two_alpha_plus_beta_zero) {
      v *= std::pow(q, lam - 0.5);
    } else if (p.alpha_half_integer()) {
      // no extra factor
    } else if (s < 0) {
      v *= std::pow(q, lam - 0.5);
    } else if (s == 0) {
      v *= 1 + std::log(4 / q);
    }
    e.value = v;
    const bool g = detail::interior_globally_sharp(p);
    e.sharp = g || tube;
    e.sign_suppressible = g;
    e.sign = 1;
    return e;
  }
  if (p.beta_nonpositive_integer()) {
    e.value = 0;
    e.sharp = true;
    e.sign_suppressible = true;
    return e;
  }
  const double c = -k.b;
  double v = std::pow(k.t, -2 * lam) * std::pow(k.a, p.beta - 1);
  bool g;
  if (p.two_alpha_plus_beta_zero) {
    v *= std::pow(c / k.a, lam - 0.5);
    g = true;
  } else if (p.beta_exact_integer && *p.beta_exact_integer == 1) {
    g = true;
  } else {
    if (s < 0) v *= std::pow(c / k.a, lam - 0.5);
    else if (s == 0) v *= 1 + std::log(k.a / c);
    g = detail::exterior_globally_sharp(p);
  }
  e.value = v;
  e.sharp = g || tube;
  e.sign_suppressible = g;
  e.sign = detail::floor_beta_wedge_zero_sign(p);
  return e;
}

inline EnvelopeValue pointwise_envelope(const Params& p, double t, double x, double z, const EnvelopeOptions& opt = {}) {
  return pointwise_envelope(p, KernelPoint(t, x, z), opt);
}

// Two-branch bound for alpha > -1/2, beta > 0 (positive kernel).
inline double est_ker_envelope(const Params& p, const KernelPoint& k) {
  if (!(p.alpha > -0.5 && p.beta > 0)) throw DomainError("est_ker: needs alpha > -1/2 and beta > 0");
  if (k.on_surface()) throw SingularSurfaceError("envelope evaluated on a singular surface");
  if (k.regime == Regime::Vanishing) return 0;
  const double al = p.alpha, lam = p.alpha + p.beta, xz = k.x * k.z;
  const int s = p.sum_vs_half();
  if (k.regime == Regime::Interior) {
    double v = std::pow(xz, -al - 0.5) * std::pow(k.t, -2 * lam) * std::pow(k.a, lam - 0.5);
    if (s < 0) v *= std::pow(k.b / xz, lam - 0.5);
    else if (s == 0) v *= 1 + std::log(xz / k.b);
    return v;
  }
  const double c = -k.b;
  double v = std::pow(k.t, -2 * lam) * std::pow(k.a, p.beta - 1);
  if (s < 0) v *= std::pow(c / k.a, lam - 0.5);
  else if (s == 0) v *= 1 + std::log(k.a / c);
  return v;
}

// The compact single display, valid in both non-vanishing regimes.
inline double compact_envelope(const Params& p, const KernelPoint& k) {
  if (!(p.alpha > -0.5 && p.beta > 0)) throw DomainError("compact envelope: needs alpha > -1/2 and beta > 0");
  if (k.on_surface()) throw SingularSurfaceError("envelope evaluated on a singular surface");
  if (k.regime == Regime::Vanishing) return 0;
  const double lam = p.alpha + p.beta;
  const double A = k.a, B = std::fabs(k.b);
  const double mx = std::max(A, B), mn = std::min(A, B);
  double v = std::pow(k.t, -2 * lam) * std::pow(mx, -p.alpha - 0.5);
  const int s = p.sum_vs_half();
  if (s < 0) v *= std::pow(mn, lam - 0.5);
  else if (s == 0) v *= 1 + std::log(A / mn);
  else v *= std::pow(A, lam - 0.5);
  return v;
}

// ---------------------------------------------------------------- time norms

// alpha + beta > 1/2 - 1/r and [(rho+1)/r < 2 alpha + 2 unless -beta in N]
inline bool norm_conds(const Params& p, const ExactReal& r, const ExactReal& rho) {
  const ExactReal one(rat(1)), half(rat(1, 2)), two(rat(2));
  if (compare(r, one) < 0) throw DomainError("r must be at least 1");
  const bool c1 = compare(p.alpha_x() + p.beta_x(), half - one / r) > 0;
  const bool c2 = p.beta_nonpositive_integer() || compare((rho + one) / r, two * p.alpha_x() + two) < 0;
  return c1 && c2;
}

struct TimeNormOptions {
  double comparable_ratio = 8.0;  // x/z beyond this (or below its inverse) counts as non-comparable
};

inline EnvelopeValue time_norm_envelope(const Params& p, const ExactReal& r, const ExactReal& rho, double x, double z,
                                        const TimeNormOptions& opt = {}) {
  if (!(x > 0 && z > 0)) throw DomainError("time_norm_envelope: x, z must be positive");
  EnvelopeValue e;
  const ExactReal one(rat(1));
  const double rr = r.value;
  // sharpness clauses (a)-(c)
  const bool a_ok = detail::interior_globally_sharp(p);
  const bool bc_base = detail::exterior_globally_sharp(p) && !p.beta_nonpositive_integer();
  const double ratio = std::max(x / z, z / x);
  const int k1 = compare((rho + one) / r, one);
  e.sharp = a_ok || (bc_base && ratio > opt.comparable_ratio) || (bc_base && k1 > 0);
  e.sign_suppressible = false;
  if (!norm_conds(p, r, rho)) {
    e.value = detail::kInf;
    return e;
  }
  const double d = std::fabs(x - z), s = x + z;
  const double q1 = (rho.value + 1) / rr;
  double f1;
  if (k1 < 0) f1 = (d == 0) ? detail::kInf : std::pow(d, q1 - 1);
  else if (k1 == 0) f1 = (d == 0) ? detail::kInf : 1 + std::pow(std::log(s / d), 1 / rr);
  else f1 = std::pow(s, q1 - 1);
  const int k2 = compare(p.beta_x() + one / r, one);
  const double q2 = p.beta + 1 / rr;
  double f2;
  if (k2 > 0) f2 = 1;
  else if (k2 == 0) f2 = 1 + (p.beta != 0 ? std::pow(std::log(ratio), 1 / rr) : 0.0);
  else f2 = std::pow(std::min(x / z, z / x), q2 - 1);
  e.value = std::pow(s, -2 * p.alpha - 1) * f1 * f2;
  return e;
}

// Per-region pieces of int |K_t|^r t^rho dt over the four t-ranges
// (|x-z|, sqrt(x^2+z^2)), (., x+z), (x+z, sqrt2 (x+z)), (sqrt2 (x+z), inf).
struct TimeNormPieces {
  double piece[4] = {0, 0, 0, 0};
  double error = 0;
  bool converged = true;
  double total() const { return piece[0] + piece[1] + piece[2] + piece[3]; }
};

// Truncation: keep t in [|x-z| + eps, x+z - eps] and [x+z + eps, T]; eps = 0 and T = inf give the full integral.
inline TimeNormPieces time_norm_pieces(const Params& p, double r, double rho, double x, double z, const QuadSpec& spec,
                                       double eps = 0.0, double T = detail::kInf) {
  spec.validate();
  if (!(x > 0 && z > 0)) throw DomainError("time_norm: x, z must be positive");
  TimeNormPieces out;
  const double d = std::fabs(x - z), s = x + z, m = std::sqrt(x * x + z * z), L = std::sqrt(2.0) * s;
  const double rel = spec.tol * 0.1;
  auto term = [&](const KernelPoint& k) {
    // gaps that underflow to zero only occur at the extreme tanh-sinh nodes
    if (!std::isfinite(k.a) || !std::isfinite(k.b)) return std::numeric_limits<double>::quiet_NaN();
    double v;
    try {
      v = kernel_legendre(p, k);
    } catch (const SingularSurfaceError&) {
      return std::numeric_limits<double>::quiet_NaN();
    }
    if (v == 0) return 0.0;
    return std::pow(std::fabs(v), r) * std::pow(k.t, rho);
  };
  auto add = [&](int i, const QuadResult& q) {
    out.piece[i] = q.value;
    out.error += q.error;
    out.converged = out.converged && q.converged && std::isfinite(q.value);
  };
  // (d, m): gap to d carried exactly
  {
    const double lo = d + eps;
    auto f = [&](double t, double da, double) {
      const double delta = (lo - d) + da;
      return term(KernelPoint::with_gaps(t, x, z, delta * (2 * d + delta), (s - t) * (s + t)));
    };
    if (m > lo) add(0, quad::tanh_sinh(f, lo, m, 0.0, rel, 12));
  }
  // (m, s): gap to s carried exactly
  {
    const double hi = s - eps;
    auto f = [&](double t, double, double db) {
      const double g = (s - hi) + db;
      return term(KernelPoint::with_gaps(t, x, z, (t - d) * (t + d), g * (2 * s - g)));
    };
    if (hi > m) add(1, quad::tanh_sinh(f, m, hi, 0.0, rel, 12));
  }
  // (s, L)
  {
    const double lo = s + eps, hi = std::min(L, T);
    auto f = [&](double t, double da, double) {
      const double g = (lo - s) + da;
      return term(KernelPoint::with_gaps(t, x, z, (t - d) * (t + d), -g * (2 * s + g)));
    };
    if (hi > lo) add(2, quad::tanh_sinh(f, lo, hi, 0.0, rel, 12));
  }
  // (L, T)
  {
    const double lo = std::max(L, s + eps);
    auto k_at = [&](double t) {
      const double g = t - s;
      return KernelPoint::with_gaps(t, x, z, (t - d) * (t + d), -g * (2 * s + g));
    };
    if (std::isinf(T)) {
      auto f = [&](double t, double) { return term(k_at(t)); };
      add(3, quad::tanh_sinh_inf(f, lo, 0.0, rel, 12));
    } else if (T > lo) {
      // log substitution t = lo e^u keeps the power-law tail well resolved
      auto f = [&](double, double da, double) {
        const double t = lo * std::exp(da);
        return term(k_at(t)) * t;
      };
      add(3, quad::tanh_sinh(f, 0.0, std::log(T / lo), 0.0, rel, 12));
    }
  }
  return out;
}

inline double time_norm_numeric(const Params& p, const ExactReal& r, const ExactReal& rho, double x, double z,
                                const QuadSpec& spec = {}) {
  if (!norm_conds(p, r, rho)) throw DomainError("time_norm_numeric: the norm is infinite for these parameters");
  const TimeNormPieces tp = time_norm_pieces(p, r.value, rho.value, x, z, spec);
  if (!tp.converged) throw ConvergenceError("time_norm_numeric did not converge", tp.error);
  return std::pow(tp.total(), 1 / r.value);
}

// Truncated r-th power integrals for level = 0, 1, 2, ...: the surface exclusion halves
// and the upper cutoff doubles at each level.
inline double time_norm_truncated(const Params& p, double r, double rho, double x, double z, int level,
                                  const QuadSpec& spec = {}) {
  const double d = std::fabs(x - z), s = x + z, m = std::sqrt(x * x + z * z);
  const double eps0 = 0.25 * std::min(m - d, s - m);
  const double eps = std::ldexp(eps0, -level);
  const double T = std::ldexp(2 * s, level);
  const TimeNormPieces tp = time_norm_pieces(p, r, rho, x, z, spec, eps, T);
  if (!tp.converged) throw ConvergenceError("time_norm_truncated did not converge", tp.error);
  return tp.total();
}

}  // namespace sphmean
