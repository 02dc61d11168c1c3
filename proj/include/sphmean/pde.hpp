#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "regions.hpp"
#include "transforms.hpp"

namespace sphmean {

enum class Problem { EPD, Wave, BesselEPD, BesselWave };
enum class DataRole { InitialPosition, InitialSpeed };

inline const char* problem_name(Problem p) {
  switch (p) {
    case Problem::EPD: return "EPD";
    case Problem::Wave: return "Wave";
    case Problem::BesselEPD: return "BesselEPD";
    case Problem::BesselWave: return "BesselWave";
  }
  return "?";
}

// Radial Cauchy problem.  EPD(n, beta) and Wave(n) use alpha = n/2 - 1.
struct CauchySpec {
  Problem problem = Problem::EPD;
  int n = 3;
  ExactReal alpha{0.0};
  ExactReal beta{0.0};
  RadialProfile data;
  DataRole role = DataRole::InitialPosition;

  static CauchySpec epd(int n, const ExactReal& beta, RadialProfile f) {
    CauchySpec s;
    s.problem = Problem::EPD;
    s.n = n;
    s.alpha = ExactReal(rat(n - 2, 2));
    s.beta = beta;
    s.data = std::move(f);
    return s;
  }
  static CauchySpec wave(int n, RadialProfile f, DataRole role = DataRole::InitialSpeed) {
    CauchySpec s;
    s.problem = Problem::Wave;
    s.n = n;
    s.alpha = ExactReal(rat(n - 2, 2));
    s.beta = ExactReal(rat(3 - n, 2));
    s.data = std::move(f);
    s.role = role;
    return s;
  }
  static CauchySpec bessel_epd(const ExactReal& alpha, const ExactReal& beta, RadialProfile f) {
    CauchySpec s;
    s.problem = Problem::BesselEPD;
    s.alpha = alpha;
    s.beta = beta;
    s.data = std::move(f);
    return s;
  }
  static CauchySpec bessel_wave(const ExactReal& alpha, RadialProfile f, DataRole role = DataRole::InitialSpeed) {
    CauchySpec s;
    s.problem = Problem::BesselWave;
    s.alpha = alpha;
    s.beta = ExactReal(rat(1, 2)) - alpha;
    s.data = std::move(f);
    s.role = role;
    return s;
  }

  bool is_wave() const { return problem == Problem::Wave || problem == Problem::BesselWave; }

  // parameters of the mean operator; refuses the initial-position wave variants
  Params params() const {
    if (problem == Problem::EPD || problem == Problem::Wave) {
      if (n < 1) throw ConfigError("dimension n must be >= 1");
    }
    if (is_wave() && role == DataRole::InitialPosition)
      throw ExcludedParameterError("initial-position wave problem lies on alpha + beta = -1/2, not supported");
    if (!is_wave() && role == DataRole::InitialSpeed)
      throw ConfigError("EPD problems take the data as initial position");
    if (compare(alpha + beta, ExactReal(rat(-1, 2))) == 0)
      throw ExcludedParameterError("alpha + beta = -1/2 is not supported");
    return Params(alpha, beta);
  }
  // coefficient c in L_alpha u - u_tt - (c/t) u_t = 0
  double damping() const {
    if (is_wave()) return 0.0;
    return 2 * alpha.value + 2 * beta.value + 1;
  }
};

inline double solve(const CauchySpec& cs, double x, double t, const QuadSpec& quad = {}) {
  const Params p = cs.params();
  const double m = mean_kernel_side(p, cs.data, t, x, quad);
  return cs.is_wave() ? t * m : m;
}

struct Residual {
  double residual = 0;  // L_alpha u - u_tt - (c/t) u_t
  double scale = 0;     // max |u| on the stencil
  bool unreliable = false;
  double relative() const { return scale > 0 ? std::fabs(residual) / scale : std::fabs(residual); }
};

// centered second-order differences in x and t
inline Residual epd_residual(const CauchySpec& cs, double x, double t, double h, const QuadSpec& quad = {}) {
  if (!(h > 0)) throw DomainError("epd_residual: h must be positive");
  if (!(t > 2 * h && x > 2 * h)) throw DomainError("epd_residual: need t > 2h and x > 2h");
  const double al = cs.alpha.value;
  const double u0 = solve(cs, x, t, quad);
  const double uxp = solve(cs, x + h, t, quad), uxm = solve(cs, x - h, t, quad);
  const double utp = solve(cs, x, t + h, quad), utm = solve(cs, x, t - h, quad);
  const double uxx = (uxp - 2 * u0 + uxm) / (h * h), ux = (uxp - uxm) / (2 * h);
  const double utt = (utp - 2 * u0 + utm) / (h * h), ut = (utp - utm) / (2 * h);
  Residual r;
  r.residual = uxx + (2 * al + 1) / x * ux - utt - cs.damping() / t * ut;
  r.scale = std::max({std::fabs(u0), std::fabs(uxp), std::fabs(uxm), std::fabs(utp), std::fabs(utm)});
  // quadrature noise amplified by 1/h^2 should stay well below the truncation term
  r.unreliable = quad.tol * r.scale / (h * h) > 1e-2 * std::fabs(r.residual);
  return r;
}

inline double richardson_ratio(const CauchySpec& cs, double x, double t, double h, const QuadSpec& quad = {}) {
  const double r1 = epd_residual(cs, x, t, h, quad).residual;
  const double r2 = epd_residual(cs, x, t, h / 2, quad).residual;
  return r1 / r2;
}

// 1-D wave with speed f: (1/2) int_{x-t}^{x+t} f(|s|) ds
inline double dalembert(const RadialProfile& f, double x, double t, const QuadSpec& quad = {}) {
  auto g = [&](double s) { return f(std::fabs(s)); };
  std::vector<double> br{x - t};
  if (x - t < 0 && x + t > 0) br.push_back(0.0);
  br.push_back(x + t);
  return 0.5 * require(quad::gauss_kronrod(g, br, 1e-300, 0.1 * quad.tol, quad.max_panels), "dalembert");
}

// Log-uniform grid used for the x and t integrals of the mixed norms.
struct LogGrid {
  double lo = 1e-4, hi = 1e5;
  double step = 0.15;  // in log; deliberately incommensurate with log 2

  std::vector<double> nodes() const {
    std::vector<double> v;
    for (double u = std::log(lo); u <= std::log(hi) + 1e-12; u += step) v.push_back(std::exp(u));
    return v;
  }
};

struct MixedNorms {
  double x_outer = 0;  // || || M_t f(x) ||_{L^r(t^rho dt)} x^{-B} ||_{L^q(d mu_alpha)}
  double t_outer = 0;  // norms exchanged
  double rhs = 0;      // || f x^A ||_{L^p(d mu_alpha)}
};

namespace detail {

inline double lp_sum(const std::vector<double>& vals, const std::vector<double>& weights, double p) {
  if (std::isinf(p)) {
    double m = 0;
    for (double v : vals) m = std::max(m, std::fabs(v));
    return m;
  }
  double s = 0;
  for (std::size_t i = 0; i < vals.size(); ++i) s += weights[i] * std::pow(std::fabs(vals[i]), p);
  return std::pow(s, 1 / p);
}

inline double recip_to_exponent(const Rational& inv) { return inv == 0 ? kInf : 1 / to_double(inv); }

}  // namespace detail

// Trapezoid in log x and log t on (x, t) grids; inner t-norm at 10x tighter quadrature tolerance.
inline MixedNorms mixed_norms(const Params& p, const MixedIndices& idx, const RadialProfile& f, const LogGrid& xg,
                              const LogGrid& tg, const QuadSpec& quad = {}) {
  if (!f.support_hint) throw DomainError("mixed_norms: needs a compactly supported profile");
  const double al = p.alpha, r = to_double(idx.r), rho = to_double(idx.rho);
  const double A = to_double(idx.A), B = to_double(idx.B);
  const double pe = detail::recip_to_exponent(idx.inv_p), qe = detail::recip_to_exponent(idx.inv_q);
  const auto xs = xg.nodes(), ts = tg.nodes();
  const QuadSpec inner = quad.with_tol(0.1 * quad.tol);
  std::vector<std::vector<double>> M(xs.size(), std::vector<double>(ts.size()));
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ts.size(); ++j) M[i][j] = mean_kernel_side(p, f, ts[j], xs[i], inner);
  std::vector<double> wt(ts.size()), wx(xs.size());
  for (std::size_t j = 0; j < ts.size(); ++j) wt[j] = tg.step * std::pow(ts[j], rho + 1);
  for (std::size_t i = 0; i < xs.size(); ++i) wx[i] = xg.step * std::pow(xs[i], 2 * al + 2);
  MixedNorms out;
  {
    std::vector<double> outer(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) outer[i] = detail::lp_sum(M[i], wt, r) * std::pow(xs[i], -B);
    out.x_outer = detail::lp_sum(outer, wx, qe);
  }
  {
    std::vector<double> outer(ts.size()), col(xs.size());
    for (std::size_t j = 0; j < ts.size(); ++j) {
      for (std::size_t i = 0; i < xs.size(); ++i) col[i] = M[i][j] * std::pow(xs[i], -B);
      outer[j] = detail::lp_sum(col, wx, qe);
    }
    out.t_outer = detail::lp_sum(outer, wt, r);
  }
  {
    const double lo = f.support_hint->first, hi = f.support_hint->second;
    if (std::isinf(pe)) {
      double m = 0;
      for (int k = 1; k < 4000; ++k) {
        const double y = lo + (hi - lo) * k / 4000.0;
        m = std::max(m, std::fabs(f(y)) * std::pow(y, A));
      }
      out.rhs = m;
    } else {
      auto g = [&](double y) { return y > 0 ? std::pow(std::fabs(f(y)) * std::pow(y, A), pe) * std::pow(y, 2 * al + 1) : 0.0; };
      std::vector<double> br;
      for (int k = 0; k <= 32; ++k) br.push_back(lo + (hi - lo) * k / 32.0);
      out.rhs = std::pow(require(quad::gauss_kronrod(g, br, 1e-300, quad.tol, quad.max_panels), "rhs norm"), 1 / pe);
    }
  }
  if (!(out.rhs > 0)) throw DomainError("mixed_norms: data has zero norm");
  return out;
}

struct ScalePoint {
  double scale, ratio;
};

inline std::vector<ScalePoint> strichartz_ratio(const Params& p, const MixedIndices& idx, const RadialProfile& f,
                                                const std::vector<double>& scales, const QuadSpec& quad = {},
                                                const LogGrid& xg = {}, const LogGrid& tg = {}) {
  std::vector<ScalePoint> out;
  for (double s : scales) {
    const MixedNorms n = mixed_norms(p, idx, f.dilated(s), xg, tg, quad);
    out.push_back({s, n.x_outer / n.rhs});
  }
  return out;
}

// least-squares slope of log ratio against log scale
inline double loglog_slope(const std::vector<ScalePoint>& pts) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(pts.size());
  for (const auto& q : pts) {
    const double X = std::log(q.scale), Y = std::log(q.ratio);
    sx += X;
    sy += Y;
    sxx += X * X;
    sxy += X * Y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace sphmean
