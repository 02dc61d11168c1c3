#pragma once

#include <boost/math/special_functions/digamma.hpp>

#include <cmath>
#include <limits>

#include "errors.hpp"

namespace sphmean {

namespace detail {

template <class T>
constexpr T pi_v = static_cast<T>(3.141592653589793238462643383279502884L);

// sin(pi x) with exact zeros at the integers.
template <class T>
T sin_pi(T x) {
  T r = std::fmod(x, T(2));
  if (r > 1) r -= 2;
  if (r < -1) r += 2;
  if (r == 0 || r == 1 || r == -1) return T(0);
  if (r > T(0.5)) r = 1 - r;
  if (r < T(-0.5)) r = -1 - r;
  return std::sin(pi_v<T> * r);
}

template <class T>
T cos_pi(T x) {
  T r = std::fmod(std::fabs(x), T(2));
  if (r == T(0.5) || r == T(1.5)) return T(0);
  if (r > 1) r = 2 - r;  // cos symmetric about 1
  if (r > T(0.5)) return -std::sin(pi_v<T> * (r - T(0.5)));
  return std::cos(pi_v<T> * r);
}

template <class T>
bool is_nonpos_int(T x) {
  return x <= 0 && x == std::floor(x);
}

template <class T>
T rgamma(T x) {
  if (is_nonpos_int(x)) return T(0);
  if (x > T(1700)) return T(0);
  if (x < T(-150)) {
    // reflection: 1/Gamma(x) = Gamma(1-x) sin(pi x) / pi, in logs
    T lg = std::lgamma(1 - x);
    T s = sin_pi(x);
    return s == 0 ? T(0) : std::copysign(std::exp(lg + std::log(std::fabs(s)) - std::log(pi_v<T>)), s);
  }
  return T(1) / std::tgamma(x);
}

// J_nu(x) / x^nu by power series, accumulated in long double.
inline long double bessel_scaled_series(long double nu, long double x) {
  const long double q = -x * x / 4;
  long double term = rgamma(nu + 1) / std::pow(2.0L, nu);
  long double sum = term;
  for (int k = 1; k < 500; ++k) {
    term *= q / (k * (nu + k));
    sum += term;
    if (std::fabs(term) <= std::numeric_limits<long double>::epsilon() * std::fabs(sum) && k > x / 2)
      break;
  }
  return sum;
}

// Hankel expansion amplitudes P, Q.  Returns false when the optimally
// truncated series has not reached ~1e-15.
inline bool bessel_hankel_pq(double nu, double x, double& P, double& Q) {
  const double mu = 4 * nu * nu;
  double b = 1.0, prev = 1.0;
  P = 1.0;
  Q = 0.0;
  for (int k = 1; k < 400; ++k) {
    double f = (mu - (2.0 * k - 1) * (2.0 * k - 1)) / (8.0 * k * x);
    b *= f;
    if (b == 0.0) return true;  // half-integer order: series terminates
    if (std::fabs(b) > prev && k > std::fabs(nu) + 1) return prev < 1e-15;
    switch (k % 4) {
      case 1: Q += b; break;
      case 2: P -= b; break;
      case 3: Q -= b; break;
      default: P += b; break;
    }
    prev = std::fabs(b);
    if (prev < 1e-17) return true;
  }
  return false;
}

constexpr double kBesselSwitch = 17.0;

inline double bessel_j_asym(double nu, double x, double P, double Q) {
  const double ph = nu / 2 + 0.25;
  const double cp = cos_pi(ph), sp = sin_pi(ph);
  const double cx = std::cos(x), sx = std::sin(x);
  const double cw = cx * cp + sx * sp, sw = sx * cp - cx * sp;
  return std::sqrt(2.0 / (pi_v<double> * x)) * (P * cw - Q * sw);
}

}  // namespace detail

inline double gamma_ln(double x) {
  if (!(x > 0)) throw DomainError("gamma_ln: non-positive argument");
  return std::lgamma(x);
}

// Entire function 1/Gamma; exactly zero at 0, -1, -2, ...
inline double gamma_reciprocal(double x) { return static_cast<double>(detail::rgamma<long double>(x)); }

inline double bessel_j(double nu, double x) {
  if (!(nu > -1)) throw DomainError("bessel_j: order must exceed -1");
  if (x < 0) throw DomainError("bessel_j: negative argument");
  if (x == 0) return nu == 0 ? 1.0 : (nu > 0 ? 0.0 : std::numeric_limits<double>::infinity());
  if (x >= detail::kBesselSwitch) {
    double P, Q;
    if (detail::bessel_hankel_pq(nu, x, P, Q)) return detail::bessel_j_asym(nu, x, P, Q);
  }
  return static_cast<double>(detail::bessel_scaled_series(nu, x) * std::pow(static_cast<long double>(x), nu));
}

// J_nu(x)/x^nu, finite at x = 0 where it equals 1/(2^nu Gamma(nu+1)).
inline double bessel_j_scaled(double nu, double x) {
  if (!(nu > -1)) throw DomainError("bessel_j_scaled: order must exceed -1");
  x = std::fabs(x);
  if (x >= detail::kBesselSwitch) {
    double P, Q;
    if (detail::bessel_hankel_pq(nu, x, P, Q)) return detail::bessel_j_asym(nu, x, P, Q) / std::pow(x, nu);
  }
  return static_cast<double>(detail::bessel_scaled_series(nu, x));
}

namespace detail {

// sum_k (a)_k (b)_k z^k / (k! Gamma(c+k)); any z when terminating, else |z| <~ 0.5
template <class T>
T f21_series(T a, T b, T c, T z) {
  if (is_nonpos_int(c)) {
    const long n = static_cast<long>(-c);
    T pre = 1;
    // (a)_{n+1} (b)_{n+1} z^{n+1}; the 1/(n+1)! comes from the regularized call below
    for (long j = 0; j <= n; ++j) pre *= (a + j) * (b + j) * z;
    if (pre == 0) return 0;
    return pre * f21_series<T>(a + n + 1, b + n + 1, T(n + 2), z);
  }
  T term = rgamma(c);
  T sum = term;
  const T big = std::max(std::fabs(a), std::fabs(b));
  for (long k = 0; k < 20000; ++k) {
    term *= (a + k) * (b + k) * z / ((k + 1) * (c + k));
    sum += term;
    if (term == 0) break;
    if (k + 1 > big && std::fabs(term) <= std::numeric_limits<T>::epsilon() * std::fabs(sum)) break;
    if (k + 1 > big && std::fabs(term) < std::numeric_limits<T>::min()) break;
  }
  return sum;
}

// z in (1/2, 1) with omz = 1 - z supplied exactly
template <class T>
T f21_near_one(T a, T b, T c, T z, T omz) {
  if (is_nonpos_int(a) || is_nonpos_int(b)) return f21_series(a, b, c, z);
  const T d = c - a - b;
  const T m = std::nearbyint(d);
  if (std::fabs(d - m) > T(1e-10)) {
    const T s = sin_pi(d);
    const T t1 = f21_series(a, b, 1 - d, omz) * rgamma(c - a) * rgamma(c - b);
    const T t2 = std::pow(omz, d) * f21_series(c - a, c - b, 1 + d, omz) * rgamma(a) * rgamma(b);
    return pi_v<T> / s * (t1 - t2);
  }
  if (m < 0) return std::pow(omz, d) * f21_near_one(c - a, c - b, c, z, omz);
  // c - a - b = m >= 0: logarithmic limit form
  const long mi = static_cast<long>(m);
  T s1 = 0;
  {
    T term = 1;  // (a)_k (b)_k (z-1)^k / k!
    T fact = std::tgamma(T(mi));
    for (long k = 0; k < mi; ++k) {
      s1 += term * fact;
      term *= (a + k) * (b + k) * (-omz) / (k + 1);
      if (mi - k - 1 > 0) fact /= (mi - k - 1);
    }
  }
  const T term1 = s1 * rgamma(a + m) * rgamma(b + m);
  T s2 = 0;
  {
    const T euler = T(0.5772156649015328606065120900824024L);
    T psi_k1 = -euler;                             // psi(k+1)
    T psi_km1 = -euler;                            // psi(k+m+1)
    for (long j = 1; j <= mi; ++j) psi_km1 += T(1) / j;
    T psi_a = boost::math::digamma(a + m), psi_b = boost::math::digamma(b + m);
    const T lg = std::log(omz);
    T coef = rgamma(T(mi + 1));                    // (a+m)_k (b+m)_k omz^k / (k! (k+m)!)
    for (long k = 0; k < 20000; ++k) {
      const T add = coef * (lg - psi_k1 - psi_km1 + psi_a + psi_b);
      s2 += add;
      if (k > std::fabs(a + m) + std::fabs(b + m) &&
          std::fabs(add) <= std::numeric_limits<T>::epsilon() * std::fabs(s2))
        break;
      coef *= (a + m + k) * (b + m + k) * omz / ((k + 1) * (k + 1 + mi));
      psi_k1 += T(1) / (k + 1);
      psi_km1 += T(1) / (k + 1 + mi);
      psi_a += T(1) / (a + m + k);
      psi_b += T(1) / (b + m + k);
      if (coef == 0) break;
    }
  }
  const T sgn = (mi % 2 == 0) ? T(1) : T(-1);
  return term1 - sgn * std::pow(omz, m) * rgamma(a) * rgamma(b) * s2;
}

}  // namespace detail

// Olver's regularized 2F1 / Gamma(c) for real z < 1; omz = 1 - z (pass when known
// to better accuracy than 1 - z in floating point).
inline double olver_2f1(double a, double b, double c, double z, double omz) {
  // z may round to 1 when omz is tiny; omz is authoritative
  if (!(z <= 1) || !(omz > 0)) throw DomainError("olver_2f1: argument must be < 1");
  using T = long double;
  const T A = a, B = b, C = c, Z = z, O = omz;
  if (detail::is_nonpos_int(A) || detail::is_nonpos_int(B))
    return static_cast<double>(detail::f21_series(A, B, C, Z));
  if (detail::is_nonpos_int(C - A) || detail::is_nonpos_int(C - B))
    return static_cast<double>(std::pow(O, C - A - B) * detail::f21_series(C - A, C - B, C, Z));
  if (std::fabs(z) <= 0.5) return static_cast<double>(detail::f21_series(A, B, C, Z));
  if (z > 0.5) return static_cast<double>(detail::f21_near_one(A, B, C, Z, O));
  // z < -1/2: Pfaff transformation to w = z/(z-1) in (1/3, 1)
  const T w = Z / (Z - 1), omw = T(1) / O;
  const T pre = std::pow(O, -A);
  if (w <= T(0.5)) return static_cast<double>(pre * detail::f21_series(A, C - B, C, w));
  return static_cast<double>(pre * detail::f21_near_one(A, C - B, C, w, omw));
}

inline double olver_2f1(double a, double b, double c, double z) { return olver_2f1(a, b, c, z, 1.0 - z); }

namespace detail {

// generalized binomial coefficient
inline long double binom(long double r, int k) {
  long double v = 1;
  for (int i = 0; i < k; ++i) v *= (r - i) / (i + 1);
  return v;
}

inline double jacobi_sum(int m, double g, double d, double y) {
  long double s = 0, u = (y - 1.0L) / 2, v = (y + 1.0L) / 2;
  for (int k = 0; k <= m; ++k)
    s += binom(m + g, m - k) * binom(m + d, k) * std::pow(u, k) * std::pow(v, m - k);
  return static_cast<double>(s);
}

}  // namespace detail

// Jacobi polynomial P_m^{(g,d)}(y), three-term recurrence with an explicit-sum
// fallback where the recurrence degenerates.
inline double jacobi_poly(int m, double g, double d, double y) {
  if (m < 0) throw DomainError("jacobi_poly: negative degree");
  if (m == 0) return 1.0;
  long double p0 = 1, p1 = (g + 1) + (g + d + 2) * (y - 1.0L) / 2;
  for (int k = 2; k <= m; ++k) {
    const long double s = 2.0L * k + g + d;
    const long double A = 2.0L * k * (k + g + d) * (s - 2);
    if (std::fabs(A) < 1e-9L * (1 + std::fabs(s) * s * k)) return detail::jacobi_sum(m, g, d, y);
    const long double p2 = ((s - 1) * (s * (s - 2) * y + (long double)g * g - (long double)d * d) * p1 -
                            2.0L * (k + g - 1) * (k + d - 1) * s * p0) /
                           A;
    p0 = p1;
    p1 = p2;
  }
  return static_cast<double>(p1);
}

}  // namespace sphmean
