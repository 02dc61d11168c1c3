#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "envelopes.hpp"
#include "params.hpp"
#include "rational.hpp"

namespace sphmean {

// Exact rational view of an ExactReal; decimal input is converted bit-exactly.
inline Rational exact_of(const ExactReal& v) {
  if (v.exact) return *v.exact;
  return Rational(v.value);
}

// Index tuple with p, q stored as reciprocals so that infinity is 0.
struct MixedIndices {
  Rational inv_p = 1, inv_q = 1;
  Rational r = 1, rho = 0, A = 0, B = 0;

  Rational inv_p_conj() const { return 1 - inv_p; }
  Rational inv_q_conj() const { return 1 - inv_q; }
  bool p_is_one() const { return inv_p == 1; }
  bool q_is_inf() const { return inv_q == 0; }
  Rational time_exponent() const { return (rho + 1) / r; }  // (rho + 1)/r

  void validate() const {
    if (inv_p < 0 || inv_p > 1 || inv_q < 0 || inv_q > 1) throw ConfigError("p and q must lie in [1, inf]");
    if (r < 1) throw ConfigError("r must lie in [1, inf)");
  }

  // "inf" or "infinity" for an infinite exponent
  static Rational parse_reciprocal(const std::string& text) {
    if (text == "inf" || text == "infinity" || text == "Inf") return 0;
    const Rational v = exact_of(ExactReal::parse(text));
    if (v < 1) throw ConfigError("exponent must be >= 1: " + text);
    return 1 / v;
  }
  static MixedIndices from_pq(const std::string& p, const std::string& q, const ExactReal& r, const ExactReal& rho,
                              const ExactReal& A, const ExactReal& B) {
    MixedIndices m;
    m.inv_p = parse_reciprocal(p);
    m.inv_q = parse_reciprocal(q);
    m.r = exact_of(r);
    m.rho = exact_of(rho);
    m.A = exact_of(A);
    m.B = exact_of(B);
    m.validate();
    return m;
  }
  std::string str() const;
};

inline std::string rat_str(const Rational& q) {
  std::string n = numerator(q).str(), d = denominator(q).str();
  return d == "1" ? n : n + "/" + d;
}

inline std::string reciprocal_str(const Rational& inv) { return inv == 0 ? "inf" : rat_str(1 / inv); }

inline std::string MixedIndices::str() const {
  return "p=" + reciprocal_str(inv_p) + " q=" + reciprocal_str(inv_q) + " r=" + rat_str(r) + " rho=" + rat_str(rho) +
         " A=" + rat_str(A) + " B=" + rat_str(B);
}

enum class CondStatus { Holds, HoldsWithEquality, Fails };

inline const char* cond_status_name(CondStatus s) {
  switch (s) {
    case CondStatus::Holds: return "holds";
    case CondStatus::HoldsWithEquality: return "holds-with-equality-allowed";
    case CondStatus::Fails: return "fails";
  }
  return "?";
}

struct Verdict {
  bool admissible = false;
  std::map<std::string, CondStatus> per_condition;
  std::optional<std::string> failure_witness;
};

namespace regions {

namespace detail {

// lhs < rhs, or lhs <= rhs when `weak`
inline CondStatus less(const Rational& lhs, const Rational& rhs, bool weak) {
  if (lhs < rhs) return CondStatus::Holds;
  if (lhs == rhs && weak) return CondStatus::HoldsWithEquality;
  return CondStatus::Fails;
}

// lhs >= rhs, or lhs > rhs when `strict`
inline CondStatus at_least(const Rational& lhs, const Rational& rhs, bool strict) {
  if (lhs > rhs) return CondStatus::Holds;
  if (lhs == rhs && !strict) return CondStatus::Holds;
  return CondStatus::Fails;
}

inline Rational wedge0(const Rational& v) { return v < 0 ? v : Rational(0); }

}  // namespace detail

inline Rational alpha_of(const Params& p) { return exact_of(p.alpha_x()); }
inline Rational beta_of(const Params& p) { return exact_of(p.beta_x()); }

inline bool norm_finite(const Params& p, const ExactReal& r, const ExactReal& rho) { return norm_conds(p, r, rho); }

// delta = (2 alpha + 2)(1/q - 1/p) - A - B + (rho + 1)/r; zero iff (C2)
inline Rational scaling_exponent(const Params& p, const MixedIndices& m) {
  return (2 * alpha_of(p) + 2) * (m.inv_q - m.inv_p) - m.A - m.B + m.time_exponent();
}

inline Verdict conditions_c1_c4(const Params& p, const MixedIndices& m) {
  m.validate();
  const Rational a2 = 2 * alpha_of(p) + 2, be = beta_of(p);
  const Rational ex = be + 1 / m.r - 1;
  const Rational mn = detail::wedge0(ex);
  const bool pq_corner = m.p_is_one() && m.q_is_inf();
  Verdict v;
  v.per_condition["C1"] = m.inv_p >= m.inv_q ? CondStatus::Holds : CondStatus::Fails;
  v.per_condition["C2"] = scaling_exponent(p, m) == 0 ? CondStatus::Holds : CondStatus::Fails;
  {
    const Rational l1 = m.A - a2 * m.inv_p_conj(), l2 = m.B - a2 * m.inv_q;
    const Rational lhs = l1 > l2 ? l1 : l2;
    v.per_condition["C3"] = detail::less(lhs, mn, pq_corner && (be == 0 || ex != 0));
  }
  v.per_condition["C4"] = detail::at_least(m.inv_q, m.inv_p - m.time_exponent(), m.p_is_one() || m.q_is_inf());
  v.admissible = true;
  for (const auto& [name, st] : v.per_condition) {
    if (st == CondStatus::Fails) {
      v.admissible = false;
      if (!v.failure_witness) v.failure_witness = name + " fails at " + m.str();
    }
  }
  return v;
}

// (C4') A + B >= (2 alpha + 1)(1/q - 1/p), strict when p = 1 or q = inf
inline bool condition_c4_prime(const Params& p, const MixedIndices& m) {
  const Rational lhs = m.A + m.B, rhs = (2 * alpha_of(p) + 1) * (m.inv_q - m.inv_p);
  return detail::at_least(lhs, rhs, m.p_is_one() || m.q_is_inf()) != CondStatus::Fails;
}

// L^p(x^{Ap} d mu_alpha) inside the domain of the auxiliary operator
inline bool domain_inclusion(const Params& p, const MixedIndices& m) {
  m.validate();
  if (m.rho <= -1) return false;
  const Rational a2 = 2 * alpha_of(p) + 2, be = beta_of(p);
  const Rational ex = be + 1 / m.r - 1, mn = detail::wedge0(ex);
  const bool weak = m.p_is_one() && (be == 0 || ex != 0);
  const Rational lo = m.time_exponent() - a2 * m.inv_p - mn;
  const Rational hi = a2 * m.inv_p_conj() + mn;
  return detail::less(lo, m.A, weak) != CondStatus::Fails && detail::less(m.A, hi, weak) != CondStatus::Fails;
}

enum class HardyWhich { Hardy, DualHardy };

// two power-weight L^p -> L^q bounds for the Hardy operator and its dual
inline bool hardy_admissible(const Rational& a, const Rational& b, const Rational& inv_p, const Rational& inv_q,
                             HardyWhich which) {
  if (inv_p < inv_q) return false;  // p <= q
  if (a - (1 - inv_p) != b + inv_q) return false;
  const bool weak = inv_p == 1 && inv_q == 0;  // p = q' = 1
  if (which == HardyWhich::Hardy) return detail::less(a, 1 - inv_p, weak) != CondStatus::Fails;
  return detail::less(-inv_q, b, weak) != CondStatus::Fails;
}

// Minkowski: the t-norm may be taken outside when q <= r
inline bool exchange_of_norms_valid(const MixedIndices& m) { return m.inv_q >= 1 / m.r; }

enum class Shape { S1, S2, S3, S4, S5, Unclassified };

inline const char* shape_name(Shape s) {
  switch (s) {
    case Shape::S1: return "S1";
    case Shape::S2: return "S2";
    case Shape::S3: return "S3";
    case Shape::S4: return "S4";
    case Shape::S5: return "S5";
    case Shape::Unclassified: return "Unclassified";
  }
  return "?";
}

// D as an interval of 1/p along the line 1/q = 1/p + kappa
struct ExactSet {
  bool empty = true;
  Rational kappa = 0;
  Rational lo = 0, hi = 0;  // in 1/p
  bool lo_included = false, hi_included = false;
};

struct ScanResult {
  std::vector<std::pair<Rational, Rational>> points;  // (1/p, 1/q) on the grid
  ExactSet exact;
  Shape shape = Shape::S5;
  bool grid_consistent = true;
};

inline MixedIndices with_pq(const MixedIndices& base, const Rational& inv_p, const Rational& inv_q) {
  MixedIndices m = base;
  m.inv_p = inv_p;
  m.inv_q = inv_q;
  return m;
}

inline ExactSet exact_admissible_set(const Params& p, const MixedIndices& base) {
  ExactSet d;
  const Rational a2 = 2 * alpha_of(p) + 2, be = beta_of(p);
  const Rational mn = detail::wedge0(be + 1 / base.r - 1);
  d.kappa = (base.A + base.B - base.time_exponent()) / a2;
  const Rational& k = d.kappa;
  // generic constraints away from p = 1 and q = inf
  if (k > 0 || k < -base.time_exponent()) return d;
  Rational lo = -k > 0 ? -k : Rational(0);
  Rational hi = 1 - k < 1 ? 1 - k : Rational(1);
  if (lo > hi) return d;
  const Rational u1 = 1 + (mn - base.A) / a2;       // C3, first entry
  const Rational l1 = (base.B - mn) / a2 - k;       // C3, second entry
  if (l1 > lo) lo = l1;
  if (u1 < hi) hi = u1;
  if (lo > hi) return d;
  auto ok = [&](const Rational& s) { return conditions_c1_c4(p, with_pq(base, s, s + k)).admissible; };
  d.lo = lo;
  d.hi = hi;
  d.lo_included = ok(lo);
  d.hi_included = ok(hi);
  d.empty = (lo == hi) ? !d.lo_included : false;
  return d;
}

inline bool in_exact_set(const ExactSet& d, const Rational& ip, const Rational& iq) {
  if (d.empty || iq != ip + d.kappa) return false;
  if (ip < d.lo || ip > d.hi) return false;
  if (ip == d.lo && !d.lo_included) return false;
  if (ip == d.hi && !d.hi_included) return false;
  return true;
}

inline Shape classify(const ExactSet& d) {
  if (d.empty) return Shape::S5;
  auto on_boundary = [&](const Rational& s) {
    const Rational t = s + d.kappa;
    return s == 0 || s == 1 || t == 0 || t == 1;
  };
  if (d.lo == d.hi) return (d.lo == 1 && d.kappa == -1) ? Shape::S4 : Shape::Unclassified;
  const bool lo_ok = on_boundary(d.lo) || !d.lo_included;
  const bool hi_ok = on_boundary(d.hi) || !d.hi_included;
  if (d.kappa < 0) {
    const bool full_chord = on_boundary(d.lo) && on_boundary(d.hi);
    if (full_chord && d.lo_included && d.hi_included) return Shape::S1;
    return (lo_ok && hi_ok) ? Shape::S2 : Shape::Unclassified;
  }
  // diagonal
  const bool whole = d.lo == 0 && d.hi == 1;
  return (!whole && lo_ok && hi_ok) ? Shape::S3 : Shape::Unclassified;
}

inline ScanResult admissible_set_scan(const Params& p, const ExactReal& A, const ExactReal& B, const ExactReal& r,
                                      const ExactReal& rho, int grid_denominator) {
  if (grid_denominator < 1 || grid_denominator > 1000) throw ConfigError("grid_denominator must lie in [1, 1000]");
  MixedIndices base;
  base.A = exact_of(A);
  base.B = exact_of(B);
  base.r = exact_of(r);
  base.rho = exact_of(rho);
  base.validate();
  ScanResult res;
  res.exact = exact_admissible_set(p, base);
  res.shape = classify(res.exact);
  const int N = grid_denominator;
  for (int i = 0; i <= N; ++i) {
    for (int j = 0; j <= N; ++j) {
      const Rational ip(i, N), iq(j, N);
      const bool adm = conditions_c1_c4(p, with_pq(base, ip, iq)).admissible;
      if (adm) res.points.emplace_back(ip, iq);
      if (adm != in_exact_set(res.exact, ip, iq)) res.grid_consistent = false;
    }
  }
  return res;
}

}  // namespace regions

}  // namespace sphmean
