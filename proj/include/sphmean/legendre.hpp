#pragma once

#include <algorithm>
#include <cmath>

#include "params.hpp"
#include "special_functions.hpp"

namespace sphmean {

enum class LegendreFunction { FerrersP, OlverQ };
enum class Endpoint { PlusOneMinus, MinusOnePlus, OnePlus, Infinity };

struct AsymptoticCase {
  LegendreFunction function;
  Endpoint endpoint;
  bool exceptional = false;
  double exponent = 0.0;  // power of (1-y), (1+y), (y-1) or y respectively
  bool logarithmic = false;
  int sign = 1;
};

struct ExceptionalSets {
  bool in_E_P = false;
  bool in_E_Q = false;
};

// Decided from exactness flags only.
inline ExceptionalSets exceptional_sets(const Params& p) {
  ExceptionalSets e;
  const int s = p.sum_vs_half();
  if (s >= 0) {
    e.in_E_P = p.beta_nonpositive_integer() || p.two_alpha_plus_beta_zero;
    e.in_E_Q = p.two_alpha_plus_beta_zero;
  } else {
    e.in_E_P = p.alpha_half_integer();
    e.in_E_Q = p.beta_exact_integer && *p.beta_exact_integer == 1;
  }
  return e;
}

namespace detail {

constexpr double kSqrtPi = 1.7724538509055160273;

inline double factorial(long n) { return std::tgamma(static_cast<double>(n) + 1.0); }

// P with 1-y and 1+y supplied separately
inline double ferrers_p_generic(const Params& p, double omy, double opy) {
  const double a = p.alpha, b = p.beta;
  const double mu = 0.5 - a - b;
  const double z = omy / 2, omz = opy / 2;
  return std::pow(opy / omy, mu / 2) * olver_2f1(a + 0.5, 0.5 - a, a + b + 0.5, z, omz);
}

inline double olver_q_generic(const Params& p, double y, double ymo, double ypo) {
  const double a = p.alpha, b = p.beta;
  const double mu = 0.5 - a - b;
  const double iy = 1.0 / y;
  const double z = iy * iy, omz = (ymo * iy) * (ypo * iy);
  return kSqrtPi * std::pow(ymo, mu / 2) * std::pow(ypo, mu / 2) / (std::pow(2.0, a + 0.5) * std::pow(y, 1.0 - b)) *
         olver_2f1(1.0 - b / 2, 0.5 - b / 2, a + 1.0, z, omz);
}

}  // namespace detail

// Ferrers function P_{alpha-1/2}^{1/2-alpha-beta}(y), y = 1 - omy = opy - 1.
inline double ferrers_p_split(const Params& p, double y, double omy, double opy) {
  if (!(omy > 0) || !(opy > 0)) throw DomainError("ferrers_p: y must lie in (-1,1)");
  const double a = p.alpha, b = p.beta;
  if (p.beta_nonpositive_integer()) {
    const long n = -*p.beta_exact_integer;
    const double g = a - n - 0.5;
    return std::pow(2.0, n - a + 0.5) * detail::factorial(n) * gamma_reciprocal(a + 0.5) *
           std::pow(opy * omy, g / 2) * jacobi_poly(static_cast<int>(n), g, g, y);
  }
  if (p.two_alpha_plus_beta_zero)
    return std::pow(2.0, a + 0.5) * gamma_reciprocal(0.5 - a) * std::pow(opy * omy, -(a + 0.5) / 2);
  if (p.alpha_exact_half_integer) {
    const long n = *p.alpha_exact_half_integer;
    if (n == -1) return gamma_reciprocal(b) * std::pow(opy / omy, (1.0 - b) / 2);
    return detail::factorial(n) * gamma_reciprocal(2.0 * n + b + 1) * std::pow(opy / omy, -(n + b) / 2) *
           jacobi_poly(static_cast<int>(n), n + b, -n - b, y);
  }
  return detail::ferrers_p_generic(p, omy, opy);
}

inline double ferrers_p(const Params& p, double y) {
  if (!(y > -1 && y < 1)) throw DomainError("ferrers_p: y must lie in (-1,1)");
  return ferrers_p_split(p, y, 1.0 - y, 1.0 + y);
}

// Olver's Q_{alpha-1/2}^{1/2-alpha-beta}(y), y = 1 + ymo = ypo - 1.
inline double olver_q_split(const Params& p, double y, double ymo, double ypo) {
  if (!(ymo > 0)) throw DomainError("olver_q: y must exceed 1");
  const double a = p.alpha, b = p.beta;
  if (p.two_alpha_plus_beta_zero)
    return detail::kSqrtPi * gamma_reciprocal(a + 1) / std::pow(2.0, a + 0.5) * std::pow(ypo * ymo, -(a + 0.5) / 2);
  if (p.alpha_exact_half_integer && *p.alpha_exact_half_integer == -1) {
    const double e = (1.0 - b) / 2;
    return 0.5 * (std::pow(ypo / ymo, e) + std::pow(ymo / ypo, e));
  }
  if (p.beta_exact_integer && *p.beta_exact_integer >= 1) {
    const long m = *p.beta_exact_integer;
    const double sgn = (m % 2 == 1) ? 1.0 : -1.0;  // (-1)^{m+1}
    const double g = 0.5 - a - m;
    return detail::kSqrtPi * sgn * detail::factorial(m - 1) * std::tgamma(2 * a + 1) * gamma_reciprocal(a + 1) *
           gamma_reciprocal(2 * a + m) / std::pow(2.0, a - m + 1.5) * std::pow(ypo * ymo, g / 2) *
           jacobi_poly(static_cast<int>(m - 1), g, g, y);
  }
  if (p.alpha_exact_half_integer && !(b <= 0 && b == std::floor(b))) {
    // reflection applied to pi / (sin(pi(n+beta)) Gamma(1-beta)) keeps this finite at integer beta
    const long n = *p.alpha_exact_half_integer;
    const double e = (n + b) / 2;
    const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
    const double c = sgn * detail::factorial(n) * std::tgamma(b) * gamma_reciprocal(2.0 * n + b + 1) / 2;
    const int ni = static_cast<int>(n);
    const double t1 = std::pow(ypo / ymo, e) * jacobi_poly(ni, -n - b, n + b, y);
    const double t2 = std::pow(ymo / ypo, e) * jacobi_poly(ni, n + b, -n - b, y);
    // the two terms cancel as y grows; past ~6 lost digits the generic form is more accurate
    if (std::fabs(t1 - t2) >= 1e-6 * std::max(std::fabs(t1), std::fabs(t2))) return c * (t1 - t2);
  }
  return detail::olver_q_generic(p, y, ymo, ypo);
}

inline double olver_q(const Params& p, double y) {
  if (!(y > 1)) throw DomainError("olver_q: y must exceed 1");
  return olver_q_split(p, y, y - 1.0, y + 1.0);
}

inline int sign_of(double v) { return v < 0 ? -1 : 1; }

// Leading-order behaviour of P or Q at one of its endpoints.
inline AsymptoticCase endpoint_asymptotic(const Params& p, LegendreFunction f, Endpoint e) {
  AsymptoticCase c{f, e};
  const double a = p.alpha, b = p.beta, lam = a + b - 0.5;
  const int s = p.sum_vs_half();
  const ExceptionalSets ex = exceptional_sets(p);
  if (f == LegendreFunction::FerrersP) {
    if (e == Endpoint::PlusOneMinus) {
      c.exponent = lam / 2;
      return c;
    }
    if (e != Endpoint::MinusOnePlus) throw DomainError("endpoint_asymptotic: P lives on (-1,1)");
    c.exceptional = ex.in_E_P;
    if (c.exceptional) {
      if (s >= 0) {
        c.exponent = lam / 2;
        c.sign = p.two_alpha_plus_beta_zero ? 1 : ((*p.beta_exact_integer % 2 == 0) ? 1 : -1);
      } else {
        c.exponent = -lam / 2;
        const long n = *p.alpha_exact_half_integer;  // alpha - 1/2 = n
        c.sign = (n == -1 || n % 2 == 0) ? 1 : -1;
      }
      return c;
    }
    if (s > 0) {
      c.exponent = -lam / 2;
      c.sign = sign_of(gamma_reciprocal(2 * a + b) * gamma_reciprocal(b));
    } else if (s == 0) {
      c.logarithmic = true;
      c.sign = sign_of(detail::sin_pi(0.5 - a));
    } else {
      c.exponent = lam / 2;
      c.sign = sign_of(detail::sin_pi(0.5 - a));
    }
    return c;
  }
  if (e == Endpoint::Infinity) {
    c.exponent = -a - 0.5;
    return c;
  }
  if (e != Endpoint::OnePlus) throw DomainError("endpoint_asymptotic: Q lives on (1,inf)");
  c.exceptional = ex.in_E_Q;
  if (c.exceptional) {
    c.exponent = std::fabs(lam) / 2;
    return c;
  }
  if (s > 0) {
    c.exponent = -lam / 2;
    c.sign = sign_of(gamma_reciprocal(2 * a + b));
  } else if (s == 0) {
    c.logarithmic = true;
    c.sign = sign_of(gamma_reciprocal(a + 0.5));
  } else {
    c.exponent = lam / 2;
    c.sign = sign_of(gamma_reciprocal(1 - b));
  }
  return c;
}

}  // namespace sphmean
