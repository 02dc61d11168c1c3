#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "errors.hpp"

namespace sphmean {

enum class DecayClass { CompactSupport, Gaussian, Polynomial };

// Radial profile on (0, inf).  Evaluation functions are immutable, so profiles
// can be shared between threads.
struct RadialProfile {
  std::function<double(double)> eval;
  std::optional<std::pair<double, double>> support_hint;  // f vanishes outside (or is negligible, for Gaussian)
  DecayClass decay_class = DecayClass::CompactSupport;
  double decay_rate = 0.0;  // |f(y)| <~ y^{-rate} at infinity, Polynomial class only
  bool smooth = true;
  std::string name;

  double operator()(double y) const { return eval(y); }

  // profile g(y) = f(y / s)
  RadialProfile dilated(double s) const {
    if (!(s > 0)) throw DomainError("dilation factor must be positive");
    RadialProfile g = *this;
    auto f = eval;
    g.eval = [f, s](double y) { return f(y / s); };
    if (support_hint) g.support_hint = std::make_pair(support_hint->first * s, support_hint->second * s);
    g.name = name + "(./" + std::to_string(s) + ")";
    return g;
  }
};

namespace profiles {

inline RadialProfile gaussian() {
  RadialProfile f;
  f.eval = [](double y) { return std::exp(-0.5 * y * y); };
  f.support_hint = std::make_pair(0.0, 14.0);  // e^{-98} is far below double resolution of the bulk
  f.decay_class = DecayClass::Gaussian;
  f.name = "gaussian";
  return f;
}

// C_c^infinity bump supported in [a, b], maximum 1 at the midpoint.
inline RadialProfile bump(double a, double b) {
  if (!(a >= 0 && b > a)) throw DomainError("bump: need 0 <= a < b");
  RadialProfile f;
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  f.eval = [c, h, a, b](double y) {
    if (!(y > a && y < b)) return 0.0;
    const double u = (y - c) / h;
    const double q = (1 - u) * (1 + u);
    return std::exp(1.0 - 1.0 / q);
  };
  f.support_hint = std::make_pair(a, b);
  f.decay_class = DecayClass::CompactSupport;
  f.name = "bump[" + std::to_string(a) + "," + std::to_string(b) + "]";
  return f;
}

// value on [0, L] and zero beyond (not smooth at L)
inline RadialProfile constant(double value, double L) {
  RadialProfile f;
  f.eval = [value, L](double y) { return y <= L ? value : 0.0; };
  f.support_hint = std::make_pair(0.0, L);
  f.smooth = false;
  f.name = "constant";
  return f;
}

// z^{-A} on (0, inf)
inline RadialProfile power(double A) {
  RadialProfile f;
  f.eval = [A](double y) { return std::pow(y, -A); };
  f.decay_class = DecayClass::Polynomial;
  f.decay_rate = A;
  f.name = "power(" + std::to_string(A) + ")";
  return f;
}

inline RadialProfile zero() {
  RadialProfile f;
  f.eval = [](double) { return 0.0; };
  f.support_hint = std::make_pair(0.0, 0.0);
  f.name = "zero";
  return f;
}

}  // namespace profiles

}  // namespace sphmean
