#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "errors.hpp"

namespace sphmean {

struct QuadSpec {
  double tol = 1e-10;
  int max_panels = 20000;
  double truncation_growth = 2.0;
  double surface_exclusion = 1e-4;

  void validate() const {
    if (!(tol > 0 && tol < 1)) throw ConfigError("QuadSpec.tol must lie in (0,1)");
    if (max_panels < 1) throw ConfigError("QuadSpec.max_panels must be positive");
    if (!(truncation_growth > 1)) throw ConfigError("QuadSpec.truncation_growth must exceed 1");
    if (!(surface_exclusion >= 0)) throw ConfigError("QuadSpec.surface_exclusion must be >= 0");
  }
  QuadSpec with_tol(double t) const {
    QuadSpec q = *this;
    q.tol = t;
    return q;
  }
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  bool converged = true;
  long evals = 0;

  QuadResult& operator+=(const QuadResult& o) {
    value += o.value;
    error += o.error;
    converged = converged && o.converged;
    evals += o.evals;
    return *this;
  }
};

inline double require(const QuadResult& r, const char* what) {
  if (!r.converged || !std::isfinite(r.value))
    throw ConvergenceError(std::string(what) + ": quadrature did not converge", r.error);
  return r.value;
}

namespace quad {

// one 21-point Kronrod panel with its embedded 10-point Gauss error estimate
template <class F>
QuadResult gk21_panel(F& f, double a, double b) {
  double err = 0;
  double v = boost::math::quadrature::gauss_kronrod<double, 21>::integrate(f, a, b, 0, 0.0, &err);
  return {v, err, true, 21};
}

// Globally adaptive Gauss-Kronrod over consecutive breakpoints.
template <class F>
QuadResult gauss_kronrod(F&& f, std::vector<double> breaks, double abs_tol, double rel_tol, int max_panels) {
  struct Panel {
    double a, b, v, e;
    bool operator<(const Panel& o) const { return e < o.e; }
  };
  std::priority_queue<Panel> heap;
  QuadResult total;
  total.evals = 0;
  double v = 0, e = 0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (!(breaks[i + 1] > breaks[i])) continue;
    QuadResult r = gk21_panel(f, breaks[i], breaks[i + 1]);
    heap.push({breaks[i], breaks[i + 1], r.value, r.error});
    v += r.value;
    e += r.error;
    total.evals += r.evals;
  }
  int panels = static_cast<int>(heap.size());
  while (!heap.empty() && e > std::max(abs_tol, rel_tol * std::fabs(v))) {
    if (panels >= max_panels) {
      total.converged = false;
      break;
    }
    Panel p = heap.top();
    heap.pop();
    const double m = 0.5 * (p.a + p.b);
    if (!(m > p.a && m < p.b)) {  // cannot split further
      total.converged = false;
      heap.push(p);
      break;
    }
    QuadResult l = gk21_panel(f, p.a, m), r = gk21_panel(f, m, p.b);
    total.evals += 42;
    heap.push({p.a, m, l.value, l.error});
    heap.push({m, p.b, r.value, r.error});
    v += l.value + r.value - p.v;
    e += l.error + r.error - p.e;
    ++panels;
  }
  // re-sum to limit drift from incremental updates
  v = 0;
  e = 0;
  while (!heap.empty()) {
    v += heap.top().v;
    e += heap.top().e;
    heap.pop();
  }
  total.value = v;
  total.error = e;
  if (!std::isfinite(v)) total.converged = false;
  return total;
}

template <class F>
QuadResult gauss_kronrod(F&& f, double a, double b, double abs_tol, double rel_tol, int max_panels) {
  return gauss_kronrod(std::forward<F>(f), std::vector<double>{a, b}, abs_tol, rel_tol, max_panels);
}

// Tanh-sinh on [a,b].  The integrand is called as f(x, da, db) with da = x-a and
// db = b-x carried separately, so endpoint singularities can be evaluated from the
// gaps rather than from x.
template <class F>
QuadResult tanh_sinh(F&& f, double a, double b, double abs_tol, double rel_tol, int max_level = 10) {
  QuadResult res;
  if (!(b > a)) {
    res.value = 0;
    return res;
  }
  const double hw = 0.5 * (b - a), c = 0.5 * (a + b);
  constexpr double half_pi = 1.5707963267948966;
  constexpr double tmax = 6.1;
  auto node = [&](double t, bool& ok) -> double {
    // contribution of the pair +-t (or the centre when t == 0)
    const double u = half_pi * std::sinh(t);
    const double e2 = std::exp(-2.0 * u);
    const double dist = hw * 2.0 * e2 / (1.0 + e2);  // hw (1 - tanh u)
    const double ch = std::cosh(t);
    const double w = hw * half_pi * ch * 4.0 * e2 / ((1.0 + e2) * (1.0 + e2));
    ok = true;
    if (t == 0) {
      res.evals += 1;
      return w * f(c, hw, hw);
    }
    if (!(dist > 0)) return 0.0;
    const double fr = f(b - dist, 2 * hw - dist, dist);
    const double fl = f(a + dist, dist, 2 * hw - dist);
    res.evals += 2;
    double s = 0;
    const bool tiny = dist < 1e-12 * hw;
    if (std::isfinite(fr)) s += fr; else if (!tiny) ok = false;
    if (std::isfinite(fl)) s += fl; else if (!tiny) ok = false;
    return w * s;
  };
  bool ok = true, all_ok = true;
  double h = 1.0;
  double sum = node(0.0, ok);
  for (double t = h; t <= tmax; t += h) {
    sum += node(t, ok);
    all_ok = all_ok && ok;
  }
  double I_prev = h * sum, I = I_prev;
  double err = std::numeric_limits<double>::infinity();
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    for (double t = h; t <= tmax; t += 2 * h) {
      sum += node(t, ok);
      all_ok = all_ok && ok;
    }
    I = h * sum;
    err = std::fabs(I - I_prev);
    if (level >= 3 && err <= std::max(abs_tol, rel_tol * std::fabs(I))) break;
    I_prev = I;
  }
  res.value = I;
  res.error = err;
  res.converged = all_ok && std::isfinite(I) && err <= std::max(abs_tol, rel_tol * std::fabs(I));
  return res;
}

// [a, inf) mapped to [0,1) by x = a + s/(1-s); f receives (x, x-a).
template <class F>
QuadResult tanh_sinh_inf(F&& f, double a, double abs_tol, double rel_tol, int max_level = 10) {
  auto g = [&](double s, double ds, double dr) -> double {
    (void)s;
    const double x = a + ds / dr;
    const double v = f(x, ds / dr);
    return v == 0 ? 0.0 : v / (dr * dr);
  };
  return tanh_sinh(g, 0.0, 1.0, abs_tol, rel_tol, max_level);
}

// Accelerated sum of an alternating-type series sum_i term(i) by K-fold
// repeated averaging (Euler transform) of the partial sums.
template <class G>
QuadResult sum_alternating(G&& term, double abs_tol, double rel_tol, int max_terms = 4000, int K = 12) {
  QuadResult res;
  std::vector<double> S;
  S.reserve(64);
  double s = 0;
  std::vector<double> binom(K + 1, 1.0);
  for (int j = 1; j <= K; ++j) binom[j] = binom[j - 1] * (K - j + 1) / j;
  const double scale = std::ldexp(1.0, -K);
  double prev = std::numeric_limits<double>::quiet_NaN(), prev2 = prev;
  for (int n = 0; n < max_terms; ++n) {
    QuadResult t = term(n);
    res.evals += t.evals;
    res.converged = res.converged && t.converged;
    s += t.value;
    S.push_back(s);
    if (static_cast<int>(S.size()) <= K) continue;
    double E = 0;
    for (int j = 0; j <= K; ++j) E += binom[j] * S[S.size() - 1 - K + j];
    E *= scale;
    const double tol = std::max(abs_tol, rel_tol * std::fabs(E));
    if (std::isfinite(prev2) && std::fabs(E - prev) <= tol && std::fabs(prev - prev2) <= tol) {
      res.value = E;
      res.error = std::fabs(E - prev) + std::fabs(prev - prev2);
      return res;
    }
    prev2 = prev;
    prev = E;
  }
  res.value = prev;
  res.error = std::fabs(prev - prev2);
  res.converged = false;
  return res;
}

}  // namespace quad

}  // namespace sphmean
