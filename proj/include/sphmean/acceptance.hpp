#pragma once

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kernel.hpp"
#include "pde.hpp"
#include "regions.hpp"
#include "transforms.hpp"

namespace sphmean::acceptance {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double achieved = 0;   // worst observed error (or band, slope deviation...)
  double tolerance = 0;  // threshold the achieved value was compared with
  std::string detail;
  double seconds = 0;
};

struct Options {
  std::uint64_t seed = 20240611;
  double tol_scale = 1.0;  // multiplies every numeric tolerance; < 1 tightens
};

namespace detail {

inline ExactReal X(const char* s) { return ExactReal::parse(s); }
inline Params P(const char* a, const char* b) { return Params::parse(a, b); }

inline double rel_err(double got, double want, double scale) {
  return std::fabs(got - want) / std::max(std::fabs(want), scale);
}

inline std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// log-uniform sample in [lo, hi]
inline double log_uniform(std::mt19937_64& g, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(g));
}

inline bool near_surface(double t, double x, double z, double rel) {
  const double r = std::sqrt(x * z);
  return std::fabs(t - std::fabs(x - z)) < rel * r || std::fabs(t - (x + z)) < rel * r;
}

template <class F>
CheckResult timed(int id, const char* name, F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.id = id;
  r.name = name;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace detail

// 1: explicit kernels through the Legendre path and the oracle
inline CheckResult check_closed_form_anchors(const Options& o) {
  using namespace detail;
  std::mt19937_64 g(o.seed + 1);
  const double tol_leg = 1e-9 * o.tol_scale, tol_orc = 1e-6 * o.tol_scale;
  const Params p1 = P("1/2", "0"), p2 = P("-1/2", "1");
  const QuadSpec qs = QuadSpec{}.with_tol(1e-9);
  double worst_leg = 0, worst_orc = 0;
  int n = 0;
  while (n < 100) {
    const double t = log_uniform(g, 0.2, 5), x = log_uniform(g, 0.2, 5), z = log_uniform(g, 0.2, 5);
    if (near_surface(t, x, z, 1e-3)) continue;
    const KernelPoint k(t, x, z);
    ++n;
    const double e1 = k.regime == Regime::Interior ? 1 / (2 * t * x * z) : 0.0;
    const double e2 = k.regime == Regime::Interior ? 1 / (2 * t) : (k.regime == Regime::Exterior ? 1 / t : 0.0);
    const double s1 = 1 / (2 * t * x * z), s2 = 1 / (2 * t);
    worst_leg = std::max({worst_leg, rel_err(kernel_legendre(p1, k), e1, s1), rel_err(kernel_legendre(p2, k), e2, s2)});
    worst_orc = std::max({worst_orc, rel_err(kernel_oracle_quadrature(p1, k, qs), e1, s1),
                          rel_err(kernel_oracle_quadrature(p2, k, qs), e2, s2)});
  }
  CheckResult r;
  r.achieved = worst_leg;
  r.tolerance = tol_leg;
  r.pass = worst_leg <= tol_leg && worst_orc <= tol_orc;
  r.detail = "legendre max rel " + fmt(worst_leg) + " (tol " + fmt(tol_leg) + "), oracle max rel " + fmt(worst_orc) +
             " (tol " + fmt(tol_orc) + ") on 100 points x 2 kernels";
  return r;
}

inline std::vector<Params> path_pairs() {
  using detail::P;
  return {P("1/2", "0"),   P("3/2", "-1/2"), P("1/2", "1/3"),   P("-1/2", "1"),   P("-1/2", "3/4"),
          P("-1/4", "1/2"), P("1/4", "-1/2"), P("0", "0"),       P("3/10", "0"),   P("1", "-1"),
          P("2", "-2"),     P("0", "-1/4"),   P("-3/10", "1/2"), P("1/5", "1/5"),  P("0", "1/2"),
          P("-1/4", "3/5"), P("3/10", "2/5"), P("7/10", "9/10"), P("13/10", "-7/10"), P("-7/10", "1/2"),
          P("-7/10", "6/5"), P("5/2", "-6/5"), P("1/10", "-9/20"), P("3/5", "-1/5"), P("-3/10", "11/5")};
}

inline std::vector<std::array<double, 3>> path_points() {
  return {{{1.0, 1.0, 1.5}}, {{0.7, 1.0, 1.2}}, {{2.0, 1.0, 1.5}}, {{0.3, 2.0, 2.1}},
          {{3.0, 1.0, 1.2}}, {{5.0, 1.0, 2.0}}, {{1.9, 1.0, 1.0}}, {{0.06, 1.0, 1.02}},
          {{4.0, 0.5, 3.0}}, {{10.0, 1.0, 1.0}}, {{0.4, 1.0, 0.5}}, {{2.4, 1.0, 1.5}}};
}

// 2: Legendre path against the Hankel-integral oracle
inline CheckResult check_path_equivalence(const Options& o) {
  const QuadSpec qs = QuadSpec{}.with_tol(1e-9);
  double worst = 0;
  std::string where;
  int fails = 0;
  for (const Params& p : path_pairs()) {
    for (const auto& pt : path_points()) {
      const KernelPoint k(pt[0], pt[1], pt[2]);
      const double a = kernel_legendre(p, k), b = kernel_oracle_quadrature(p, k, qs);
      const double tol = std::max(1e-6 * std::fabs(a), 1e-9) * o.tol_scale;
      const double e = std::fabs(a - b) / tol;
      if (e > 1) ++fails;
      if (e > worst) {
        worst = e;
        where = p.str() + " t=" + detail::fmt(pt[0]) + " x=" + detail::fmt(pt[1]) + " z=" + detail::fmt(pt[2]);
      }
    }
  }
  CheckResult r;
  r.achieved = worst;
  r.tolerance = 1;
  r.pass = fails == 0;
  r.detail = "25 pairs x 12 points; worst |diff|/max(1e-6|K|,1e-9) = " + detail::fmt(worst) + " at " + where;
  return r;
}

// 3: K_t(x,z) = s^{-2a-2} K_{t/s}(x/s,z/s) and K_t(x,z) = K_t(z,x)
inline CheckResult check_homogeneity(const Options& o) {
  using namespace detail;
  std::mt19937_64 g(o.seed + 3);
  const auto pairs = path_pairs();
  const double tol = 1e-9 * o.tol_scale;
  const double scales[3] = {0.5, 2.0, 7.3};
  double worst = 0;
  int n = 0;
  while (n < 500) {
    const Params& p = pairs[g() % pairs.size()];
    const double t = log_uniform(g, 0.1, 10), x = log_uniform(g, 0.1, 10), z = log_uniform(g, 0.1, 10);
    if (near_surface(t, x, z, 1e-6)) continue;
    ++n;
    const double k0 = kernel_legendre(p, t, x, z);
    const double ref = std::max(std::fabs(k0), 1e-300);
    worst = std::max(worst, std::fabs(kernel_legendre(p, t, z, x) - k0) / ref);
    for (double s : scales) {
      const double ks = std::pow(s, -2 * p.alpha - 2) * kernel_legendre(p, t / s, x / s, z / s);
      worst = std::max(worst, k0 == 0 ? std::fabs(ks) : std::fabs(ks - k0) / ref);
    }
  }
  CheckResult r;
  r.achieved = worst;
  r.tolerance = tol;
  r.pass = worst <= tol;
  r.detail = "500 random points, s in {1/2, 2, 7.3} plus x<->z symmetry; max rel dev " + fmt(worst);
  return r;
}

// (alpha, beta) grid for the zero census: region interiors plus every boundary segment
inline std::vector<Params> census_grid() {
  std::vector<Params> out;
  std::set<std::pair<Rational, Rational>> seen;
  auto add = [&](const Rational& a, const Rational& b) {
    if (a <= -1 || a + b <= Rational(-1, 2)) return;
    if (seen.insert({a, b}).second) out.push_back(Params::exact(a, b));
  };
  const Rational as[] = {Rational(-19, 20), Rational(-9, 10), Rational(-4, 5), Rational(-3, 4), Rational(-5, 8),
                         Rational(-1, 2),   Rational(-3, 8),  Rational(-1, 4), Rational(0),     Rational(1, 4),
                         Rational(1, 2),    Rational(5, 8),   Rational(3, 4),  Rational(1),     Rational(3, 2),
                         Rational(2)};
  // boundary segments: alpha = -1/2, alpha = 1/2, beta = 0, beta = 1, beta = -2 alpha
  for (const Rational& a : as) {
    add(a, Rational(0));
    add(a, Rational(1));
    add(a, -2 * a);
    add(a, -2 * a + Rational(1, 16));
    add(a, -2 * a - Rational(1, 16));
  }
  const Rational bs[] = {Rational(-7, 4), Rational(-5, 4), Rational(-3, 4), Rational(-1, 2), Rational(-1, 4),
                         Rational(-1, 8), Rational(1, 4),  Rational(1, 2),  Rational(9, 8),  Rational(5, 4),
                         Rational(3, 2),  Rational(7, 4),  Rational(5, 2),  Rational(3, 8),  Rational(3, 4),
                         Rational(2),     Rational(-3, 2)};
  for (const Rational& b : bs) {
    add(Rational(-1, 2), b);
    add(Rational(1, 2), b);
  }
  for (const Rational& a : as)
    for (const Rational& b : bs) {
      if (out.size() >= 200) break;
      add(a, b);
    }
  if (out.size() > 200) out.erase(out.begin() + 200, out.end());
  return out;
}

// 4: predicted against observed sign changes of P on (-1,1) and Q on (1,inf)
inline CheckResult check_zero_census(const Options&) {
  const auto grid = census_grid();
  int bad = 0, inconclusive = 0;
  std::string first;
  for (const Params& p : grid) {
    for (LegendreFunction w : {LegendreFunction::FerrersP, LegendreFunction::OlverQ}) {
      const ZeroCount z = count_legendre_zeros(p, w);
      if (z.inconclusive) ++inconclusive;
      const bool ok = z.predicted_at_least ? z.observed >= z.predicted : z.observed == z.predicted;
      if (!ok) {
        ++bad;
        if (first.empty())
          first = p.str() + (w == LegendreFunction::FerrersP ? " P" : " Q") + " predicted " +
                  std::to_string(z.predicted) + (z.predicted_at_least ? "+" : "") + " observed " +
                  std::to_string(z.observed);
      }
    }
  }
  CheckResult r;
  r.achieved = bad;
  r.tolerance = 0;
  r.pass = bad == 0 && inconclusive == 0;
  r.detail = std::to_string(grid.size()) + " (alpha,beta) points; mismatches " + std::to_string(bad) +
             ", inconclusive scans " + std::to_string(inconclusive) + (first.empty() ? "" : "; first: " + first);
  return r;
}

// t samples in each regime for x = 1 and given z, approaching both surfaces geometrically
inline std::vector<double> envelope_t_samples(double x, double z) {
  const double d = std::fabs(x - z), s = x + z;
  std::vector<double> ts;
  const double us[] = {1e-8, 1e-6, 1e-4, 1e-3, 1e-2, 0.05, 0.1, 0.2, 0.3, 0.4, 0.5,
                       0.6,  0.7,  0.8,  0.9,  0.95, 0.99, 0.999, 1 - 1e-4, 1 - 1e-6, 1 - 1e-8};
  for (double u : us) ts.push_back(d + (s - d) * u);
  const double vs[] = {1e-8, 1e-6, 1e-4, 1e-3, 1e-2, 0.05, 0.1, 0.3, 1, 3, 10, 30, 100, 1e3, 1e4};
  for (double v : vs) ts.push_back(s * (1 + v));
  return ts;
}

struct Band {
  double lo = sphmean::detail::kInf, hi = 0;
  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  bool empty() const { return hi == 0; }
  double spread() const { return empty() ? 1.0 : std::sqrt(hi / lo); }  // C after centring on the geometric mean
};

inline std::vector<Params> envelope_pairs() {
  using detail::P;
  return {P("1/2", "0"),   P("0", "1"),       P("3/10", "2/5"),  P("1/5", "1/5"),   P("3/2", "-1/2"),
          P("1", "-1"),    P("-1/4", "1/2"),  P("-1/2", "1"),    P("0", "-1/4"),    P("3/4", "-1/5"),
          P("-7/10", "6/5"), P("-7/10", "7/4"), P("1", "2"),     P("0", "1/2"),     P("2", "1/3")};
}

// 5: |K| / envelope bands where the pointwise estimates are two-sided
inline CheckResult check_envelope_bands(const Options& o) {
  const double limit = 50 * std::max(o.tol_scale, 1e-300);
  double worst = 1;
  int sign_flips = 0;
  std::string where, lines;
  for (const Params& p : envelope_pairs()) {
    Band inner, outer;
    for (int j = -6; j <= 6; ++j) {
      const double x = 1, z = std::ldexp(1.0, j);
      for (double t : envelope_t_samples(x, z)) {
        const KernelPoint k(t, x, z);
        if (k.on_surface() || k.regime == Regime::Vanishing) continue;
        const double K = kernel_legendre(p, k);
        const EnvelopeValue e = pointwise_envelope(p, k);
        if (e.value == 0) continue;
        if (e.sign_suppressible && K * e.sign < 0) ++sign_flips;
        if (!e.sharp) continue;
        (k.regime == Regime::Interior ? inner : outer).add(std::fabs(K) / e.value);
      }
    }
    for (const Band* b : {&inner, &outer}) {
      if (b->spread() > worst) {
        worst = b->spread();
        where = p.str() + (b == &inner ? " interior" : " exterior");
      }
    }
    lines += p.str() + ":" + detail::fmt(inner.spread()) + "/" + detail::fmt(outer.spread()) + " ";
  }
  CheckResult r;
  r.achieved = worst;
  r.tolerance = limit;
  r.pass = worst < limit && sign_flips == 0;
  r.detail = "max band C = " + detail::fmt(worst) + " at " + where + "; sign flips " + std::to_string(sign_flips) +
             "; C interior/exterior per pair: " + lines;
  return r;
}

struct TimeNormTuple {
  const char *alpha, *beta, *r, *rho;
};

inline std::vector<TimeNormTuple> finite_tnorm_tuples() {
  return {{"1/2", "0", "1", "-1/2"}, {"1/2", "1/2", "2", "0"}, {"1/2", "1", "1", "0"},   {"1", "-1/4", "2", "1"},
          {"1/2", "0", "1", "1/2"},  {"3/10", "2/5", "1", "1/2"}, {"0", "1/2", "4", "0"}, {"1/2", "0", "2", "1"},
          {"-1/4", "1", "2", "0"},   {"1", "-1", "1", "0"},   {"1/2", "1/2", "1", "3/2"}, {"3/2", "-1/2", "2", "2"}};
}

inline std::vector<TimeNormTuple> divergent_tnorm_tuples() {
  return {{"0", "0", "4", "0"},     {"1/5", "1/5", "10", "0"}, {"1/2", "-1/4", "4", "0"}, {"0", "1", "1", "1"},
          {"1/2", "1/2", "1", "3"}, {"-1/4", "1/2", "1", "2"}, {"1/10", "0", "4", "0"},   {"1", "-9/10", "10", "0"},
          {"0", "1/4", "2", "5"},   {"1/2", "1", "2", "6"}};
}

// strictly increasing, increments not collapsing (each at least half of the previous one)
inline bool grows_without_stabilizing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] > v[i - 1])) return false;
  for (std::size_t i = 2; i < v.size(); ++i)
    if (v[i] - v[i - 1] < 0.5 * (v[i - 1] - v[i - 2])) return false;
  return true;
}

// 6: L^r(t^rho dt) norms of the kernel against the time-norm envelope
inline CheckResult check_time_norm_audit(const Options& o) {
  const double limit = 50 * o.tol_scale;
  const QuadSpec qs = QuadSpec{}.with_tol(1e-7);
  double worst = 1;
  int diag_bad = 0;
  std::string where, lines;
  for (const auto& tu : finite_tnorm_tuples()) {
    const Params p = detail::P(tu.alpha, tu.beta);
    const ExactReal r = detail::X(tu.r), rho = detail::X(tu.rho);
    Band b;
    for (int j = -6; j <= 6; ++j) {
      const double x = std::ldexp(1.0, j), z = 1;
      const EnvelopeValue e = time_norm_envelope(p, r, rho, x, z);
      if (std::isinf(e.value)) {
        // x = z with (rho+1)/r <= 1: the norm itself is infinite
        std::vector<double> v;
        for (int level = 0; level <= 4; ++level) v.push_back(time_norm_truncated(p, r.value, rho.value, x, z, level, qs));
        if (!grows_without_stabilizing(v)) ++diag_bad;
        continue;
      }
      b.add(time_norm_numeric(p, r, rho, x, z, qs) / e.value);
    }
    if (b.spread() > worst) {
      worst = b.spread();
      where = p.str() + " r=" + tu.r + " rho=" + tu.rho;
    }
    lines += detail::fmt(b.spread()) + " ";
  }
  int stuck = 0;
  std::string first_stuck;
  for (const auto& tu : divergent_tnorm_tuples()) {
    const Params p = detail::P(tu.alpha, tu.beta);
    const ExactReal r = detail::X(tu.r), rho = detail::X(tu.rho);
    if (norm_conds(p, r, rho)) {
      ++stuck;
      first_stuck = p.str() + " satisfies the finiteness conditions";
      continue;
    }
    std::vector<double> v;
    for (int level = 0; level <= 4; ++level) v.push_back(time_norm_truncated(p, r.value, rho.value, 1.0, 1.5, level, qs));
    if (!grows_without_stabilizing(v)) {
      ++stuck;
      if (first_stuck.empty()) first_stuck = p.str() + " r=" + tu.r + " rho=" + tu.rho;
    }
  }
  CheckResult r;
  r.achieved = worst;
  r.tolerance = limit;
  r.pass = worst < limit && stuck == 0 && diag_bad == 0;
  r.detail = "12 finite tuples, x/z in 2^-6..2^6: max band C = " + detail::fmt(worst) + " at " + where +
             " (per tuple: " + lines + "); infinite-envelope points not diverging: " + std::to_string(diag_bad) +
             "; 10 divergent tuples, non-growing: " + std::to_string(stuck) +
             (first_stuck.empty() ? "" : " first " + first_stuck);
  return r;
}

// 7: Gaussian fixed point, self-inverse and Plancherel
inline CheckResult check_hankel(const Options& o) {
  const double tol_g = 1e-8 * o.tol_scale, tol = 1e-6 * o.tol_scale;
  const double alphas[] = {-0.5, 0.0, 0.5, 1.5};
  double worst_g = 0;
  const auto gauss = profiles::gaussian();
  for (double al : alphas)
    for (double x : {0.0, 0.3, 1.0, 2.5, 6.0}) worst_g = std::max(worst_g, std::fabs(hankel(al, gauss, x) - std::exp(-x * x / 2)));
  double worst_rt = 0, worst_pl = 0;
  for (const auto& f : {gauss, profiles::bump(0.25, 3.25), profiles::bump(1, 4)}) {
    for (double al : alphas) {
      const HankelGrid g = hankel_grid(al, f, QuadSpec{}.with_tol(1e-7));
      if (!g.converged) throw ConvergenceError("Hankel table did not decay", 1);
      worst_rt = std::max(worst_rt, hankel_roundtrip_error(g, f, f.support_hint->second + 1));
      worst_pl = std::max(worst_pl, std::fabs(std::sqrt(g.l2_norm_sq() / l2_norm_sq(al, f)) - 1));
    }
  }
  CheckResult r;
  r.achieved = std::max(worst_rt, worst_pl);
  r.tolerance = tol;
  r.pass = worst_g <= tol_g && worst_rt <= tol && worst_pl <= tol;
  r.detail = "gaussian fixed point " + detail::fmt(worst_g) + " (tol " + detail::fmt(tol_g) + "), roundtrip " +
             detail::fmt(worst_rt) + ", plancherel " + detail::fmt(worst_pl) + " (tol " + detail::fmt(tol) + ")";
  return r;
}

inline std::vector<Params> agreement_pairs() {
  using detail::P;
  return {P("1/2", "0"),     P("0", "1"),      P("3/2", "-1/2"), P("3/10", "2/5"), P("-1/4", "5/4"),
          P("0", "-1/4"),    P("-1/2", "1/2"), P("1", "-3/4"),   P("-3/10", "1/2")};
}

// 8: multiplier-side and kernel-side means on a bump
inline CheckResult check_definition_agreement(const Options& o) {
  const double tol = 1e-4 * o.tol_scale;
  const auto f = profiles::bump(0.5, 2.5);
  double worst = 0;
  std::string where;
  for (const Params& p : agreement_pairs()) {
    const HankelGrid g = hankel_grid(p.alpha, f, QuadSpec{}.with_tol(1e-7), 0.25);
    for (double t : {0.3, 1.0, 2.2})
      for (double x : {0.4, 1.2, 2.0, 3.5}) {
        const double m = mean_multiplier_side(p, g, t, x), k = mean_kernel_side(p, f, t, x);
        const double e = std::fabs(m - k) / std::max(std::fabs(k), 1.0);
        if (e > worst) {
          worst = e;
          where = p.str() + " t=" + detail::fmt(t) + " x=" + detail::fmt(x);
        }
      }
  }
  CheckResult r;
  r.achieved = worst;
  r.tolerance = tol;
  r.pass = worst <= tol;
  r.detail = "9 pairs x 12 (t,x); max |diff|/max(|value|,1) = " + detail::fmt(worst) + " at " + where;
  return r;
}

// 9: exact region logic
inline CheckResult check_regions(const Options&) {
  using namespace regions;
  using detail::P;
  using detail::X;
  std::vector<std::string> failures;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  };
  // (C4) <=> (C4') under (C2), denominator 24
  long checked = 0;
  {
    const Params ps[] = {P("0", "1"), P("1/2", "0"), P("-1/3", "1/2"), P("3/2", "-1/2")};
    const char* rs[] = {"1", "2", "3/2"};
    const char* rhos[] = {"-1/2", "0", "1", "2"};
    const char* As[] = {"-1", "0", "1/3", "1"};
    for (const Params& p : ps)
      for (const char* r : rs)
        for (const char* rho : rhos)
          for (const char* A : As)
            for (int i = 0; i <= 24; ++i)
              for (int j = 0; j <= 24; ++j) {
                MixedIndices m;
                m.inv_p = Rational(i, 24);
                m.inv_q = Rational(j, 24);
                m.r = exact_of(X(r));
                m.rho = exact_of(X(rho));
                m.A = exact_of(X(A));
                m.B = (2 * alpha_of(p) + 2) * (m.inv_q - m.inv_p) + m.time_exponent() - m.A;  // forces (C2)
                const bool c4 = conditions_c1_c4(p, m).per_condition.at("C4") != CondStatus::Fails;
                if (c4 != condition_c4_prime(p, m)) failures.push_back("C4/C4' differ at " + m.str());
                ++checked;
              }
  }
  // hand-checked examples
  expect(norm_finite(P("1/5", "1/5"), X("4"), X("0")), "norm_finite (0.2,0.2,4,0)");
  expect(!norm_finite(P("1/5", "1/5"), X("10"), X("0")), "norm_finite (0.2,0.2,10,0)");
  expect(norm_finite(P("0", "0"), X("1"), X("5")), "norm_finite waiver for beta = 0");
  expect(scaling_exponent(P("0", "1"), MixedIndices::from_pq("2", "2", X("2"), X("1"), X("0"), X("0"))) == 1,
         "scaling exponent 1");
  expect(scaling_exponent(P("0", "1"), MixedIndices::from_pq("4/3", "4", X("2"), X("1"), X("0"), X("0"))) == 0,
         "scaling exponent 0");
  expect(conditions_c1_c4(P("0", "1"), MixedIndices::from_pq("4/3", "4", X("2"), X("1"), X("0"), X("0"))).admissible,
         "admissible (0,1,2,1,4/3,4)");
  {
    // p = 1, q = inf with (rho+1)/r = 1: (C4) strict
    const auto v = conditions_c1_c4(P("0", "1"), MixedIndices::from_pq("1", "inf", X("1"), X("0"), X("0"), X("0")));
    expect(v.per_condition.at("C4") == CondStatus::Fails, "C4 strict at (1,inf)");
  }
  {
    // p = q' = 1, beta = 0, A on the (C3) boundary 2 alpha + 2/p' = 0
    const auto v = conditions_c1_c4(P("0", "0"), MixedIndices::from_pq("1", "inf", X("1"), X("1"), X("0"), X("-1")));
    expect(v.per_condition.at("C3") == CondStatus::HoldsWithEquality, "C3 equality allowed");
  }
  expect(!domain_inclusion(P("0", "1"), MixedIndices::from_pq("2", "2", X("1"), X("-1"), X("0"), X("0"))),
         "rho = -1 excluded");
  expect(!domain_inclusion(P("0", "1"), MixedIndices::from_pq("2", "2", X("1"), X("0"), X("0"), X("0"))),
         "Cincl lower endpoint is strict for p = 2");
  expect(domain_inclusion(P("0", "1"), MixedIndices::from_pq("2", "2", X("1"), X("0"), X("1/2"), X("0"))),
         "Cincl interior point");
  expect(domain_inclusion(P("0", "0"), MixedIndices::from_pq("1", "2", X("1"), X("0"), X("-1"), X("0"))),
         "Cincl p = 1 weak endpoint");
  expect(hardy_admissible(0, 0, 1, 0, HardyWhich::Hardy), "Hardy equality at p = q' = 1");
  expect(!hardy_admissible(0, -1, 1, 1, HardyWhich::Hardy), "Hardy (a=0,b=-1,p=q=1) strict");
  expect(!hardy_admissible(1, Rational(-1, 2), Rational(1, 2), Rational(1, 2), HardyWhich::Hardy), "Hardy a >= 1/p'");
  expect(hardy_admissible(0, 0, 1, 0, HardyWhich::DualHardy), "dual Hardy b = -1/q at p = q' = 1");
  // shapes
  std::set<Shape> seen;
  int misclassified_empty = 0, inconsistent = 0, unclassified = 0;
  struct Tup {
    const char *a, *b, *r, *rho, *A, *B;
  };
  const Tup tups[] = {{"0", "1", "2", "1", "0", "0"},          {"1", "1", "1", "2", "-1/2", "-1/2"},
                      {"0", "1", "2", "1", "5", "5"},          {"1/2", "1", "1", "0", "-1", "-1/2"},
                      {"1/2", "1", "2", "0", "-1", "3/2"},     {"1/2", "0", "2", "0", "0", "1/2"},
                      {"-1/2", "1", "1", "0", "0", "0"},       {"1", "-1/2", "2", "1", "1/2", "1/4"},
                      {"0", "1/2", "3/2", "1/2", "-1/4", "1"}, {"3/2", "-1", "1", "0", "-2", "-2"}};
  for (const Tup& t : tups) {
    const ScanResult s = admissible_set_scan(P(t.a, t.b), X(t.A), X(t.B), X(t.r), X(t.rho), 24);
    seen.insert(s.shape);
    if (!s.grid_consistent) ++inconsistent;
    if (s.shape == Shape::Unclassified) ++unclassified;
    if (s.points.empty() && s.exact.empty && s.shape != Shape::S5) ++misclassified_empty;
    if (s.shape == Shape::S5 && !s.points.empty()) ++misclassified_empty;
  }
  expect(admissible_set_scan(P("0", "1"), X("0"), X("0"), X("2"), X("1"), 24).shape == Shape::S2, "S2 example");
  expect(admissible_set_scan(P("1", "1"), X("-1/2"), X("-1/2"), X("1"), X("2"), 24).shape == Shape::S4, "S4 example");
  for (Shape sh : {Shape::S2, Shape::S4, Shape::S5})
    expect(seen.count(sh) == 1, std::string("shape ") + shape_name(sh) + " not produced");
  expect(misclassified_empty == 0, "empty set misclassified");
  expect(inconsistent == 0, "grid scan disagrees with exact set");
  CheckResult r;
  r.achieved = static_cast<double>(failures.size());
  r.tolerance = 0;
  r.pass = failures.empty();
  r.detail = std::to_string(checked) + " (C2)-grid points for C4/C4'; shapes seen:";
  for (Shape sh : seen) r.detail += std::string(" ") + shape_name(sh);
  r.detail += "; unclassified " + std::to_string(unclassified);
  if (!failures.empty()) r.detail += "; first failure: " + failures.front();
  return r;
}

struct StrichartzTuple {
  const char *alpha, *beta, *r, *rho, *p, *q, *A, *B;
};

inline std::vector<StrichartzTuple> admissible_strichartz() {
  return {{"1/2", "0", "2", "0", "2", "2", "0", "1/2"},
          {"0", "1", "2", "1", "4/3", "4", "0", "0"},
          {"1", "1/2", "2", "0", "2", "2", "0", "1/2"}};
}

inline std::vector<StrichartzTuple> c2_violating_strichartz() {
  return {{"1/2", "0", "2", "0", "2", "2", "1/4", "1/2"},
          {"0", "1", "2", "1", "4/3", "4", "1/4", "0"},
          {"1", "1/2", "2", "0", "2", "2", "-1/4", "1/2"}};
}

// 10: scaling law of the mixed-norm ratio
inline CheckResult check_strichartz(const Options& o) {
  using namespace regions;
  const double tol = 0.02 * o.tol_scale;
  const auto f = profiles::bump(0.5, 1.5);
  std::vector<double> scales;
  for (int k = -4; k <= 4; ++k) scales.push_back(std::ldexp(1.0, k));
  const QuadSpec qs = QuadSpec{}.with_tol(1e-6);
  double worst = 0;
  bool ok = true;
  std::string lines;
  auto run = [&](const StrichartzTuple& t, bool admissible) {
    const Params p = detail::P(t.alpha, t.beta);
    const MixedIndices idx = MixedIndices::from_pq(t.p, t.q, detail::X(t.r), detail::X(t.rho), detail::X(t.A), detail::X(t.B));
    const Verdict v = conditions_c1_c4(p, idx);
    const bool only_c2 = !v.admissible && v.per_condition.at("C2") == CondStatus::Fails &&
                         v.per_condition.at("C1") != CondStatus::Fails && v.per_condition.at("C3") != CondStatus::Fails &&
                         v.per_condition.at("C4") != CondStatus::Fails;
    if (admissible ? !(v.admissible && norm_finite(p, detail::X(t.r), detail::X(t.rho))) : !only_c2) ok = false;
    const auto pts = strichartz_ratio(p, idx, f, scales, qs);
    const double delta = to_double(scaling_exponent(p, idx));
    const double slope = loglog_slope(pts);
    double lo = sphmean::detail::kInf, hi = 0;
    for (const auto& q : pts) {
      lo = std::min(lo, q.ratio * std::pow(q.scale, -delta));
      hi = std::max(hi, q.ratio * std::pow(q.scale, -delta));
    }
    const double dev = std::max(std::fabs(slope - delta), hi / lo - 1);
    worst = std::max(worst, dev);
    lines += "slope " + detail::fmt(slope) + " vs " + detail::fmt(delta) + "; ";
  };
  for (const auto& t : admissible_strichartz()) run(t, true);
  for (const auto& t : c2_violating_strichartz()) run(t, false);
  CheckResult r;
  r.achieved = worst;
  r.tolerance = tol;
  r.pass = ok && worst <= tol;
  r.detail = "max(|slope - delta|, spread of ratio*s^-delta) = " + detail::fmt(worst) + "; " + lines +
             (ok ? "" : "tuple verdicts not as intended");
  return r;
}

// 11: finite-difference residuals and the 1-D wave
inline CheckResult check_pde(const Options& o) {
  using detail::X;
  const auto g = profiles::gaussian();
  const std::vector<CauchySpec> specs = {
      CauchySpec::epd(3, X("1"), g),        CauchySpec::epd(3, X("1/2"), g),      CauchySpec::epd(2, X("-1/3"), g),
      CauchySpec::bessel_epd(X("1"), X("-1/3"), g), CauchySpec::bessel_epd(X("3/10"), X("2/5"), g),
      CauchySpec::bessel_wave(X("3/10"), g), CauchySpec::bessel_wave(X("1"), g)};
  double worst = 0;
  bool ok = true;
  std::string lines;
  for (const auto& cs : specs) {
    const double ratio = richardson_ratio(cs, 1.3, 0.7, 0.1);
    ok = ok && ratio >= 3 && ratio <= 5;
    worst = std::max(worst, std::fabs(ratio - 4));
    lines += detail::fmt(ratio) + " ";
  }
  const CauchySpec w = CauchySpec::wave(1, g);
  double worst_w = 0;
  for (double x : {0.4, 1.3, 2.5})
    for (double t : {0.2, 0.9, 1.7, 3.1}) worst_w = std::max(worst_w, std::fabs(solve(w, x, t) - dalembert(g, x, t)));
  const double tol_w = 1e-5 * o.tol_scale;
  CheckResult r;
  r.achieved = worst_w;
  r.tolerance = tol_w;
  r.pass = ok && worst_w <= tol_w;
  r.detail = "Richardson ratios " + lines + "(need [3,5]); n=1 wave vs d'Alembert max " + detail::fmt(worst_w);
  return r;
}

inline std::vector<std::pair<int, std::function<CheckResult(const Options&)>>> numeric_checks() {
  return {{1, check_closed_form_anchors}, {2, check_path_equivalence}, {3, check_homogeneity},
          {4, check_zero_census},         {5, check_envelope_bands},   {6, check_time_norm_audit},
          {7, check_hankel},              {8, check_definition_agreement}, {9, check_regions},
          {10, check_strichartz},         {11, check_pde}};
}

inline const char* check_title(int id) {
  switch (id) {
    case 1: return "closed-form kernel anchors";
    case 2: return "Legendre vs oracle path equivalence";
    case 3: return "homogeneity and symmetry";
    case 4: return "zero census";
    case 5: return "envelope sharpness bands";
    case 6: return "time-norm envelope audit";
    case 7: return "Hankel properties";
    case 8: return "definition agreement";
    case 9: return "region logic";
    case 10: return "Strichartz scaling law";
    case 11: return "PDE residuals";
    case 12: return "CLI reproducibility";
  }
  return "?";
}

inline CheckResult run_numeric_check(int id, const Options& o) {
  for (const auto& [i, fn] : numeric_checks())
    if (i == id) return detail::timed(id, check_title(id), [&] { return fn(o); });
  throw ConfigError("no such check: " + std::to_string(id));
}

}  // namespace sphmean::acceptance
