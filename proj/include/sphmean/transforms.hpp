#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "envelopes.hpp"
#include "profiles.hpp"

namespace sphmean {

// m_{alpha,beta}(s) = 2^lam Gamma(lam+1) J_lam(s)/s^lam, equal to 1 at s = 0
inline double multiplier(const Params& p, double s) {
  if (s < 0) throw DomainError("multiplier: s must be nonnegative");
  const double lam = p.lambda();
  if (s == 0) return 1.0;
  return std::exp(lam * std::log(2.0) + std::lgamma(lam + 1)) * bessel_j_scaled(lam, s);
}

namespace detail {

// integral of F(z, z - lo_anchor, hi_anchor - z) over [lo, hi]; hi may be +inf
template <class F>
QuadResult integrate_gaps(F&& f, double lo, double hi, double lo_anchor, double hi_anchor, double rel) {
  if (!(hi > lo)) return {};
  if (std::isinf(hi)) {
    auto g = [&](double z, double dz) { return f(z, (lo - lo_anchor) + dz, hi_anchor - z); };
    return quad::tanh_sinh_inf(g, lo, 0.0, rel, 12);
  }
  auto g = [&](double z, double da, double db) { return f(z, (lo - lo_anchor) + da, (hi_anchor - hi) + db); };
  return quad::tanh_sinh(g, lo, hi, 0.0, rel, 12);
}

inline std::pair<double, double> clip(const RadialProfile& f, double lo, double hi) {
  if (f.support_hint) return {std::max(lo, f.support_hint->first), std::min(hi, f.support_hint->second)};
  return {lo, hi};
}

}  // namespace detail

// H_alpha f(x) = int_0^inf f(y) J_alpha(xy)/(xy)^alpha y^{2 alpha + 1} dy
inline double hankel(double alpha, const RadialProfile& f, double x, const QuadSpec& spec = {}) {
  spec.validate();
  if (!(alpha > -1)) throw DomainError("hankel: alpha must exceed -1");
  if (x < 0) throw DomainError("hankel: x must be nonnegative");
  const double rel = 0.01 * spec.tol;
  auto g = [&](double y) {
    if (y <= 0) return 0.0;
    const double fy = f(y);
    return fy == 0 ? 0.0 : fy * bessel_j_scaled(alpha, x * y) * std::pow(y, 2 * alpha + 1);
  };
  const double period = x > 0 ? M_PI / x : detail::kInf;
  // absolute floor relative to int |f| y^{2 alpha + 1}, the size of H f(0)
  double abs_tol = 1e-300;
  if (f.support_hint && f.support_hint->second > f.support_hint->first) {
    auto m = [&](double y, double, double) { return y > 0 ? std::fabs(f(y)) * std::pow(y, 2 * alpha + 1) : 0.0; };
    const QuadResult sc = quad::tanh_sinh(m, f.support_hint->first, f.support_hint->second, 0.0, 1e-6, 8);
    abs_tol = std::max(abs_tol, std::max(1e-3 * rel, 1e-12) * std::fabs(sc.value));  // roundoff floor
  }
  QuadResult total;
  auto body = [&](double lo, double hi) {
    const double w = std::min(4 * period, std::max((hi - lo) / 4, 1e-3));
    std::vector<double> br;
    for (double y = lo; y < hi; y += w) br.push_back(y);
    br.push_back(hi);
    const int cap = std::max(spec.max_panels, 4 * static_cast<int>(br.size()));
    total += quad::gauss_kronrod(g, br, abs_tol, rel, cap);
  };
  if (f.support_hint) {
    const double lo = f.support_hint->first, hi = f.support_hint->second;
    if (!(hi > lo)) return 0.0;
    if (lo == 0) {
      // possible integrable singularity of y^{2 alpha + 1} f(y) at the origin
      const double y1 = std::min({hi, period, 1.0});
      auto h = [&](double, double dy, double) { return g(dy); };
      total += quad::tanh_sinh(h, 0.0, y1, abs_tol, rel, 12);
      body(y1, hi);
    } else {
      body(lo, hi);
    }
    return require(total, "hankel");
  }
  if (x == 0) throw DomainError("hankel: x = 0 needs a compactly supported profile");
  const double Y0 = std::max(20.0, 40 * period);
  {
    const double y1 = std::min(period, 1.0);
    auto h = [&](double, double dy, double) { return g(dy); };
    total += quad::tanh_sinh(h, 0.0, y1, 0.0, rel, 12);
    body(y1, Y0);
  }
  auto piece = [&](int i) { return quad::gauss_kronrod(g, Y0 + i * period, Y0 + (i + 1) * period, 1e-300, 1e-13, 50); };
  total += quad::sum_alternating(piece, 1e-300, rel, 20000);
  return require(total, "hankel");
}

// H_alpha f tabulated on a fixed Gauss-Kronrod node set of [0, ymax], reused for
// every outer evaluation (second transform, Plancherel, multiplier-side means).
struct HankelGrid {
  double alpha = 0;
  std::vector<double> y, w, Hf;
  double ymax = 0;
  bool converged = false;

  template <class G>
  double integrate(G&& g) const {
    double s = 0;
    for (std::size_t i = 0; i < y.size(); ++i) s += w[i] * Hf[i] * g(y[i]) * std::pow(y[i], 2 * alpha + 1);
    return s;
  }
  double inverse_at(double x) const {
    return integrate([&](double yy) { return bessel_j_scaled(alpha, x * yy); });
  }
  double l2_norm_sq() const {
    double s = 0;
    for (std::size_t i = 0; i < y.size(); ++i) s += w[i] * Hf[i] * Hf[i] * std::pow(y[i], 2 * alpha + 1);
    return s;
  }
};

namespace detail {

struct Gk21Nodes {
  std::vector<double> x, w;  // on [-1, 1]
  Gk21Nodes() {
    using GK = boost::math::quadrature::gauss_kronrod<double, 21>;
    const auto& a = GK::abscissa();
    const auto& wt = GK::weights();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) {
        x.push_back(0);
        w.push_back(wt[i]);
      } else {
        x.push_back(-a[i]);
        w.push_back(wt[i]);
        x.push_back(a[i]);
        w.push_back(wt[i]);
      }
    }
  }
};

inline const Gk21Nodes& gk21_nodes() {
  static const Gk21Nodes n;
  return n;
}

}  // namespace detail

// Panels of width h until |H f(y)| y^{alpha+1/2} stays below tol * 1e-2 of its maximum for 10 units of y.
inline HankelGrid hankel_grid(double alpha, const RadialProfile& f, const QuadSpec& spec = {}, double h = 0.5,
                              double ymax_cap = 4000) {
  HankelGrid g;
  g.alpha = alpha;
  const auto& n = detail::gk21_nodes();
  double peak = 0, recent = 0;
  const int quiet = static_cast<int>(std::ceil(10.0 / h));
  int since = 0;
  QuadSpec inner = spec.with_tol(std::min(spec.tol, 1e-10));
  auto add_panel = [&](double a, double b) {
    double m = 0;
    for (std::size_t i = 0; i < n.x.size(); ++i) {
      const double yy = a + 0.5 * (b - a) * (n.x[i] + 1);
      const double v = hankel(alpha, f, yy, inner);
      g.y.push_back(yy);
      g.w.push_back(0.5 * (b - a) * n.w[i]);
      g.Hf.push_back(v);
      m = std::max(m, std::fabs(v) * std::pow(yy, alpha + 0.5));
    }
    return m;
  };
  for (int k = 0;; ++k) {
    const double a = k * h, b = a + h;
    if (a >= ymax_cap) break;
    double mpanel = 0;
    if (k == 0) {
      // geometric panels resolve the y^{2 alpha + 1} weight at the origin
      const int levels = 24;
      mpanel = add_panel(0.0, std::ldexp(h, -levels));
      for (int j = levels; j > 0; --j) mpanel = std::max(mpanel, add_panel(std::ldexp(h, -j), std::ldexp(h, 1 - j)));
    } else {
      mpanel = add_panel(a, b);
    }
    peak = std::max(peak, mpanel);
    recent = std::max(recent, mpanel);
    if (++since >= quiet) {
      if (b > 5 && recent < 1e-2 * spec.tol * peak) {
        g.converged = true;
        g.ymax = b;
        break;
      }
      since = 0;
      recent = 0;
    }
    g.ymax = b;
  }
  return g;
}

inline double l2_norm_sq(double alpha, const RadialProfile& f, const QuadSpec& spec = {}) {
  if (!f.support_hint) throw DomainError("l2_norm_sq: needs a support hint");
  auto g = [&](double y) {
    const double v = f(y);
    return v * v * std::pow(y, 2 * alpha + 1);
  };
  const double lo = f.support_hint->first, hi = f.support_hint->second;
  std::vector<double> br;
  for (int i = 0; i <= 64; ++i) br.push_back(lo + (hi - lo) * i / 64.0);
  return require(quad::gauss_kronrod(g, br, 1e-300, 0.01 * spec.tol, spec.max_panels), "l2_norm_sq");
}

// Relative L2(d mu_alpha) error of H(Hf) against f, measured on [0, X] with GK panels of width hx.
inline double hankel_roundtrip_error(const HankelGrid& g, const RadialProfile& f, double X, double hx = 0.125) {
  const auto& n = detail::gk21_nodes();
  double err = 0, ref = 0;
  for (double a = 0; a < X; a += hx) {
    for (std::size_t i = 0; i < n.x.size(); ++i) {
      const double x = a + 0.5 * hx * (n.x[i] + 1);
      const double wgt = 0.5 * hx * n.w[i] * std::pow(x, 2 * g.alpha + 1);
      const double fx = f(x), d = g.inverse_at(x) - fx;
      err += wgt * d * d;
      ref += wgt * fx * fx;
    }
  }
  return std::sqrt(err / ref);
}

// Multiplier-side mean H(m(t.) H f)(x)
inline double mean_multiplier_side(const Params& p, const HankelGrid& g, double t, double x) {
  if (std::fabs(g.alpha - p.alpha) > 0) throw DomainError("mean_multiplier_side: grid built for another alpha");
  if (!g.converged) throw ConvergenceError("mean_multiplier_side: Hankel table truncated before decay", 1.0);
  return g.integrate([&](double yy) { return multiplier(p, t * yy) * bessel_j_scaled(p.alpha, x * yy); });
}

inline double mean_multiplier_side(const Params& p, const RadialProfile& f, double t, double x, const QuadSpec& spec = {}) {
  if (!f.smooth || !f.support_hint || f.decay_class != DecayClass::CompactSupport)
    throw DomainError("mean_multiplier_side: needs a smooth compactly supported profile");
  const double h = std::min(0.5, 4.0 / (t + x));
  return mean_multiplier_side(p, hankel_grid(p.alpha, f, spec, h), t, x);
}

// Kernel-side mean: int K_t(x,z) f(z) d mu_alpha(z), split at the singular z = |x-t|, x+t, t-x.
inline double mean_kernel_side(const Params& p, const RadialProfile& f, double t, double x, const QuadSpec& spec = {}) {
  spec.validate();
  if (!(t > 0 && x > 0)) throw DomainError("mean_kernel_side: t, x must be positive");
  const double rel = 0.1 * spec.tol;
  const double al = p.alpha;
  QuadResult total;
  auto weight = [&](double z, double kv) {
    if (kv == 0) return 0.0;
    const double fz = f(z);
    return fz == 0 ? 0.0 : kv * fz * std::pow(z, 2 * al + 1);
  };
  auto safe = [&](const KernelPoint& k, double z) {
    if (!std::isfinite(k.a) || !std::isfinite(k.b)) return std::numeric_limits<double>::quiet_NaN();
    try {
      return weight(z, kernel_legendre(p, k));
    } catch (const SingularSurfaceError&) {
      return std::numeric_limits<double>::quiet_NaN();
    }
  };
  // interior z in (|x-t|, x+t)
  {
    const double z0 = std::fabs(x - t), z1 = x + t;
    auto [lo, hi] = detail::clip(f, z0, z1);
    // g0 = z - z0, g1 = z1 - z; both gap forms below are exact identities
    auto F = [&](double z, double g0, double g1) {
      double a, b;
      if (t >= x) {
        a = g1 * (2 * t - g1);
        b = g0 * (2 * t + g0);
      } else {
        a = (g0 <= g1) ? g0 * (2 * t - g0) : g1 * (2 * t - g1);
        b = (x + z - t) * (x + z + t);
      }
      return safe(KernelPoint::with_gaps(t, x, z, a, b), z);
    };
    total += detail::integrate_gaps(F, lo, hi, z0, z1, rel);
  }
  // exterior z in (0, t - x)
  if (t > x && gamma_reciprocal(p.beta) != 0) {
    const double z1 = t - x;
    auto [lo, hi] = detail::clip(f, 0.0, z1);
    auto F = [&](double z, double, double g1) {
      const double c = g1 * (2 * t - g1);
      return safe(KernelPoint::with_gaps(t, x, z, (t - x + z) * (t + x - z), -c), z);
    };
    total += detail::integrate_gaps(F, lo, hi, 0.0, z1, rel);
  }
  return require(total, "mean_kernel_side");
}

// ---------------------------------------------------------------- auxiliary operators

// K_{r,rho}(x,z): the time-norm envelope viewed as a kernel in (x,z).
struct AuxKernel {
  double alpha, beta, r, q1, q2;
  int k1, k2;
  bool beta_zero;

  AuxKernel(const Params& p, const ExactReal& r_, const ExactReal& rho) {
    const ExactReal one(rat(1));
    alpha = p.alpha;
    beta = p.beta;
    r = r_.value;
    q1 = (rho.value + 1) / r;
    q2 = p.beta + 1 / r;
    k1 = compare((rho + one) / r_, one);
    k2 = compare(p.beta_x() + one / r_, one);
    beta_zero = compare(p.beta_x(), ExactReal(rat(0))) == 0;
  }
  // gap = |x - z| supplied separately for accuracy near the diagonal
  double operator()(double x, double z, double gap) const {
    const double s = x + z;
    double f1;
    if (k1 < 0) f1 = std::pow(gap, q1 - 1);
    else if (k1 == 0) f1 = 1 + std::pow(std::log(s / gap), 1 / r);
    else f1 = std::pow(s, q1 - 1);
    const double ratio = std::max(x / z, z / x);
    double f2;
    if (k2 > 0) f2 = 1;
    else if (k2 == 0) f2 = 1 + (beta_zero ? 0.0 : std::pow(std::log(ratio), 1 / r));
    else f2 = std::pow(1 / ratio, q2 - 1);
    return std::pow(s, -2 * alpha - 1) * f1 * f2;
  }
  double operator()(double x, double z) const { return (*this)(x, z, std::fabs(x - z)); }
};

namespace detail {

// int over (0, inf) of g(z, |x - z|) f(z) w(z) dz split at x/2, x, 2x; optionally truncated
template <class G>
QuadResult integrate_around(G&& g, const RadialProfile& f, double x, double rel, double zlo = 0.0,
                            double zhi = std::numeric_limits<double>::infinity(), double excl = 0.0) {
  QuadResult total;
  const double br[5] = {zlo, 0.5 * x, x, 2 * x, zhi};
  for (int i = 0; i < 4; ++i) {
    double lo = std::max(br[i], zlo), hi = std::min(br[i + 1], zhi);
    if (i == 1) hi = std::min(hi, x - excl);
    if (i == 2) lo = std::max(lo, x + excl);
    auto [clo, chi] = clip(f, lo, hi);
    auto F = [&](double z, double g0, double g1) {
      const double gap = (i == 1) ? g1 : (i == 2 ? g0 : std::fabs(x - z));
      const double fz = f(z);
      if (fz == 0) return 0.0;
      return g(z, gap) * fz;
    };
    const double loa = (i == 2) ? x : clo, hia = (i == 1) ? x : chi;
    total += integrate_gaps(F, clo, chi, loa, std::isinf(hia) ? clo : hia, rel);
  }
  return total;
}

}  // namespace detail

inline double aux_k_operator(const Params& p, const ExactReal& r, const ExactReal& rho, const RadialProfile& f, double x,
                             const QuadSpec& spec = {}) {
  const AuxKernel K(p, r, rho);
  auto g = [&](double z, double gap) { return K(x, z, gap) * std::pow(z, 2 * p.alpha + 1); };
  return require(detail::integrate_around(g, f, x, 0.1 * spec.tol), "aux_k_operator");
}

// truncated to z in [x 2^{-L-2}, x 2^{L+2}] with |z - x| > x 2^{-L-3}, L = level
inline double aux_k_truncated(const Params& p, const ExactReal& r, const ExactReal& rho, const RadialProfile& f, double x,
                              int level, const QuadSpec& spec = {}) {
  const AuxKernel K(p, r, rho);
  auto g = [&](double z, double gap) { return K(x, z, gap) * std::pow(z, 2 * p.alpha + 1); };
  const double lo = std::ldexp(x, -level - 2), hi = std::ldexp(x, level + 2), ex = std::ldexp(x, -level - 3);
  return require(detail::integrate_around(g, f, x, 0.1 * spec.tol, lo, hi, ex), "aux_k_truncated");
}

enum class HardyKind { H0, HInf, H0Log, HInfLog, T, S };

inline double hardy_component(HardyKind kind, double eta, const Params& p, const ExactReal& r, const ExactReal& rho,
                              const RadialProfile& f, double x, const QuadSpec& spec = {}) {
  const double al = p.alpha, rr = r.value, q = (rho.value + 1) / rr;
  const double rel = 0.1 * spec.tol;
  const double inf = std::numeric_limits<double>::infinity();
  auto seg = [&](auto&& h, double lo, double hi, double lo_anchor, double hi_anchor) {
    auto [clo, chi] = detail::clip(f, lo, hi);
    auto F = [&](double z, double g0, double g1) {
      const double fz = f(z);
      return fz == 0 ? 0.0 : h(z, g0, g1) * fz;
    };
    return detail::integrate_gaps(F, clo, chi, lo_anchor == 0 ? clo : lo_anchor, hi_anchor, rel);
  };
  QuadResult res;
  switch (kind) {
    case HardyKind::H0: {
      auto h = [&](double z, double, double) { return std::pow(z, 2 * al + 1 + eta); };
      res = seg(h, 0.0, x, 0.0, x);
      res.value *= std::pow(x, -2 * al - 2 + q - eta);
      break;
    }
    case HardyKind::HInf: {
      auto h = [&](double z, double, double) { return std::pow(z, q - 1 - eta); };
      res = seg(h, x, inf, x, x);
      res.value *= std::pow(x, eta);
      break;
    }
    case HardyKind::H0Log: {
      auto h = [&](double z, double, double) { return std::pow(std::log(2 * x / z), 1 / rr) * std::pow(z, 2 * al + 1); };
      res = seg(h, 0.0, x, 0.0, x);
      res.value *= std::pow(x, -2 * al - 2 + q);
      break;
    }
    case HardyKind::HInfLog: {
      auto h = [&](double z, double, double) { return std::pow(std::log(2 * z / x), 1 / rr) * std::pow(z, q - 1); };
      res = seg(h, x, inf, x, x);
      break;
    }
    case HardyKind::T: {
      auto lower = [&](double, double, double g1) { return std::pow(g1, q - 1); };
      auto upper = [&](double, double g0, double) { return std::pow(g0, q - 1); };
      res = seg(lower, 0.5 * x, x, 0.5 * x, x);
      res += seg(upper, x, 2 * x, x, 2 * x);
      break;
    }
    case HardyKind::S: {
      auto lower = [&](double z, double, double g1) { return std::pow(std::log((x + z) / g1), 1 / rr); };
      auto upper = [&](double z, double g0, double) { return std::pow(std::log((x + z) / g0), 1 / rr); };
      res = seg(lower, 0.5 * x, x, 0.5 * x, x);
      res += seg(upper, x, 2 * x, x, 2 * x);
      break;
    }
  }
  return require(res, "hardy_component");
}

// Sum of the components that the auxiliary operator decomposes into.
inline double hardy_decomposition(const Params& p, const ExactReal& r, const ExactReal& rho, const RadialProfile& f,
                                  double x, const QuadSpec& spec = {}) {
  const ExactReal one(rat(1));
  const int k1 = compare((rho + one) / r, one);
  const int k2 = compare(p.beta_x() + one / r, one);
  const bool bz = compare(p.beta_x(), ExactReal(rat(0))) == 0;
  const double eta = p.beta + 1 / r.value - 1;
  double s = hardy_component(HardyKind::H0, eta, p, r, rho, f, x, spec) +
             hardy_component(HardyKind::HInf, eta, p, r, rho, f, x, spec);
  if (k2 > 0)
    s += hardy_component(HardyKind::H0, 0, p, r, rho, f, x, spec) + hardy_component(HardyKind::HInf, 0, p, r, rho, f, x, spec);
  if (k2 == 0 && !bz)
    s += hardy_component(HardyKind::H0Log, 0, p, r, rho, f, x, spec) +
         hardy_component(HardyKind::HInfLog, 0, p, r, rho, f, x, spec);
  if (k1 < 0) s += hardy_component(HardyKind::T, 0, p, r, rho, f, x, spec);
  if (k1 == 0) s += hardy_component(HardyKind::S, 0, p, r, rho, f, x, spec);
  return s;
}

}  // namespace sphmean
