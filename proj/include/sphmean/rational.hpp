#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cmath>
#include <optional>
#include <string>

#include "errors.hpp"

namespace sphmean {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational rat(long long num, long long den = 1) { return Rational(num, den); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline Rational floor_rat(const Rational& q) {
  BigInt n = numerator(q), d = denominator(q);
  BigInt f = n / d;  // truncates toward zero
  if (n < 0 && f * d != n) f -= 1;
  return Rational(f);
}

// A real number that may carry an exact rational value.  Only text of the
// form "n" or "n/d" produces an exact value; decimals stay inexact.
struct ExactReal {
  double value = 0.0;
  std::optional<Rational> exact;

  ExactReal() = default;
  ExactReal(double v) : value(v) {}
  ExactReal(const Rational& q) : value(to_double(q)), exact(q) {}
  ExactReal(long long num, long long den) : ExactReal(Rational(num, den)) {}

  bool is_exact() const { return exact.has_value(); }
  operator double() const { return value; }

  static ExactReal parse(const std::string& text) {
    std::string s;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ConfigError("empty number");
    auto is_int_text = [](const std::string& u) {
      if (u.empty()) return false;
      std::size_t i = (u[0] == '-' || u[0] == '+') ? 1 : 0;
      if (i == u.size()) return false;
      for (; i < u.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(u[i]))) return false;
      return true;
    };
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      std::string n = s.substr(0, slash), d = s.substr(slash + 1);
      if (!is_int_text(n) || !is_int_text(d)) throw ConfigError("bad rational: " + text);
      BigInt bn(n[0] == '+' ? n.substr(1) : n), bd(d[0] == '+' ? d.substr(1) : d);
      if (bd == 0) throw ConfigError("zero denominator: " + text);
      return ExactReal(Rational(bn, bd));
    }
    if (is_int_text(s)) return ExactReal(Rational(BigInt(s[0] == '+' ? s.substr(1) : s)));
    std::size_t pos = 0;
    double v;
    try {
      v = std::stod(s, &pos);
    } catch (...) {
      throw ConfigError("bad number: " + text);
    }
    if (pos != s.size() || !std::isfinite(v)) throw ConfigError("bad number: " + text);
    return ExactReal(v);
  }

  std::string str() const {
    if (exact) {
      std::string n = numerator(*exact).str(), d = denominator(*exact).str();
      return d == "1" ? n : n + "/" + d;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
  }
};

// Sign of (lhs - rhs) where both sides are linear combinations of ExactReal;
// exact when every input is exact, otherwise compared in double.
inline int compare(const ExactReal& lhs, const ExactReal& rhs) {
  if (lhs.exact && rhs.exact) return *lhs.exact < *rhs.exact ? -1 : (*lhs.exact > *rhs.exact ? 1 : 0);
  return lhs.value < rhs.value ? -1 : (lhs.value > rhs.value ? 1 : 0);
}

inline ExactReal operator+(const ExactReal& a, const ExactReal& b) {
  if (a.exact && b.exact) return ExactReal(*a.exact + *b.exact);
  return ExactReal(a.value + b.value);
}
inline ExactReal operator-(const ExactReal& a, const ExactReal& b) {
  if (a.exact && b.exact) return ExactReal(*a.exact - *b.exact);
  return ExactReal(a.value - b.value);
}
inline ExactReal operator*(const ExactReal& a, const ExactReal& b) {
  if (a.exact && b.exact) return ExactReal(*a.exact * *b.exact);
  return ExactReal(a.value * b.value);
}
inline ExactReal operator/(const ExactReal& a, const ExactReal& b) {
  if (a.exact && b.exact) {
    if (*b.exact == 0) throw DomainError("division by zero");
    return ExactReal(*a.exact / *b.exact);
  }
  return ExactReal(a.value / b.value);
}

}  // namespace sphmean
