#pragma once

#include <optional>
#include <string>

#include "errors.hpp"
#include "rational.hpp"

namespace sphmean {

// The pair (alpha, beta).  Exactness flags come only from exact rational input.
class Params {
 public:
  double alpha = 0.0;
  double beta = 0.0;
  std::optional<long> alpha_exact_half_integer;  // n with alpha = n + 1/2, n >= -1
  std::optional<long> beta_exact_integer;        // m with beta = m
  bool two_alpha_plus_beta_zero = false;

  Params(ExactReal a, ExactReal b) : alpha(a.value), beta(b.value), a_(a), b_(b) {
    if (compare(a_, ExactReal(rat(-1))) <= 0) throw DomainError("alpha must exceed -1");
    if (compare(a_ + b_, ExactReal(rat(-1, 2))) <= 0)
      throw DomainError("alpha + beta must exceed -1/2");
    if (a_.exact) {
      Rational s = *a_.exact - rat(1, 2);
      if (is_integer(s) && s >= -1) alpha_exact_half_integer = static_cast<long>(numerator(s));
    }
    if (b_.exact && is_integer(*b_.exact)) beta_exact_integer = static_cast<long>(numerator(*b_.exact));
    if (a_.exact && b_.exact) two_alpha_plus_beta_zero = (2 * *a_.exact + *b_.exact) == 0;
  }
  Params(double a, double b) : Params(ExactReal(a), ExactReal(b)) {}

  static Params exact(const Rational& a, const Rational& b) { return Params(ExactReal(a), ExactReal(b)); }
  static Params parse(const std::string& a, const std::string& b) {
    return Params(ExactReal::parse(a), ExactReal::parse(b));
  }

  const ExactReal& alpha_x() const { return a_; }
  const ExactReal& beta_x() const { return b_; }
  bool is_exact() const { return a_.exact && b_.exact; }
  Params generic() const { return Params(alpha, beta); }

  double lambda() const { return alpha + beta; }
  // sign of alpha + beta - 1/2
  int sum_vs_half() const { return compare(a_ + b_, ExactReal(rat(1, 2))); }
  // -beta in N (N contains 0)
  bool beta_nonpositive_integer() const { return beta_exact_integer && *beta_exact_integer <= 0; }
  // alpha + 1/2 in N
  bool alpha_half_integer() const { return alpha_exact_half_integer.has_value(); }

  std::string str() const { return "(" + a_.str() + ", " + b_.str() + ")"; }

 private:
  ExactReal a_, b_;
};

}  // namespace sphmean
