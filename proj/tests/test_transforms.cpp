#include <gtest/gtest.h>

#include <cmath>
#include <sphmean/transforms.hpp>

#include "oracles/oracle_values.hpp"

using namespace sphmean;

namespace {
constexpr double kPi = 3.14159265358979323846;
double rel(double got, double want) { return std::fabs(got - want) / std::fabs(want); }
}  // namespace

TEST(Multiplier, Values) {
  EXPECT_EQ(multiplier(Params(0.3, 0.6), 0.0), 1.0);
  EXPECT_NEAR(multiplier(Params::parse("1/4", "1/4"), kPi), 0.0, 1e-15);
  EXPECT_NEAR(multiplier(Params::parse("0", "0"), 5.0), oracle::kJ0_5, 1e-12);
  EXPECT_THROW(multiplier(Params(0.3, 0.6), -1.0), DomainError);
}

TEST(Hankel, GaussianIsFixed) {
  const RadialProfile g = profiles::gaussian();
  for (double a : {-0.5, 0.0, 0.5, 1.5, -0.8})
    for (double x : {0.1, 1.0, 2.5, 4.0}) EXPECT_NEAR(hankel(a, g, x), std::exp(-0.5 * x * x), 1e-8) << a << " " << x;
}

TEST(Hankel, BumpOracle) {
  EXPECT_NEAR(hankel(0.5, profiles::bump(1, 2), 3.0), oracle::kHankelBump12_a05_x3, 1e-10);
  EXPECT_NEAR(hankel(-0.3, profiles::bump(1, 2), 7.5), oracle::kHankelBump12_am03_x7_5, 1e-10);
}

TEST(Hankel, DomainErrors) {
  EXPECT_THROW(hankel(-1.0, profiles::gaussian(), 1.0), DomainError);
  EXPECT_THROW(hankel(0.0, profiles::gaussian(), -1.0), DomainError);
  EXPECT_THROW(hankel(0.0, profiles::power(3.0), 0.0), DomainError);
}

TEST(Hankel, RoundtripAndPlancherel) {
  const RadialProfile f = profiles::bump(0.5, 2.0);
  const HankelGrid g = hankel_grid(0.0, f);
  ASSERT_TRUE(g.converged);
  EXPECT_LT(hankel_roundtrip_error(g, f, 2.5), 1e-6);
  EXPECT_LT(rel(g.l2_norm_sq(), l2_norm_sq(0.0, f)), 1e-6);
}

TEST(Means, ExplicitHalfZero) {
  const Params p = Params::parse("1/2", "0");
  EXPECT_NEAR(mean_kernel_side(p, profiles::constant(1, 10), 1, 2), 1.0, 1e-10);
  EXPECT_NEAR(mean_kernel_side(p, profiles::bump(1, 2), 0.7, 1.2), oracle::kMean_half_0_bump12_t07_x12, 1e-9);
}

TEST(Means, PiecewiseConstantKernel) {
  EXPECT_NEAR(mean_kernel_side(Params::parse("-1/2", "1"), profiles::bump(1, 2), 1.6, 0.4),
              oracle::kMean_mhalf_1_bump12_t16_x04, 1e-8);
}

TEST(Means, ZeroProfile) { EXPECT_EQ(mean_kernel_side(Params(0.3, 0.6), profiles::zero(), 1, 2), 0.0); }

TEST(Means, ConstantIsPreserved) {
  for (auto [a, b] : {std::pair{0.3, 0.6}, std::pair{1.0, 0.25}, std::pair{-0.2, 1.7}})
    for (auto [t, x] : {std::pair{1.0, 2.0}, std::pair{3.0, 1.0}})
      EXPECT_NEAR(mean_kernel_side(Params(a, b), profiles::constant(1, 10), t, x), 1.0, 1e-8) << a << " " << b << " " << t;
}

TEST(Means, SmallTimeRecoversProfile) {
  const RadialProfile f = profiles::bump(1, 2);
  for (double x : {1.3, 1.5}) EXPECT_NEAR(mean_kernel_side(Params(0.3, 0.6), f, 1e-2, x), f(x), 1e-3);
}

TEST(Means, MultiplierSideAgrees) {
  const RadialProfile f = profiles::bump(1, 2);
  // one ordinary point and one with alpha + beta in the conditional-convergence zone
  for (auto [a, b, t, x] : {std::tuple{0.3, 0.6, 0.7, 1.2}, std::tuple{0.1, 0.2, 2.0, 0.5}}) {
    const Params p(a, b);
    EXPECT_NEAR(mean_multiplier_side(p, f, t, x), mean_kernel_side(p, f, t, x), 1e-4) << a << " " << b;
  }
  EXPECT_THROW(mean_multiplier_side(Params(0.3, 0.6), profiles::constant(1, 2), 1, 1), DomainError);
}

TEST(Hardy, TExample) {
  const Params p(0.3, 0.6);
  const double v = hardy_component(HardyKind::T, 0, p, ExactReal(rat(2)), ExactReal(rat(0)), profiles::constant(1, 10), 1.0);
  EXPECT_NEAR(v, 2 + std::sqrt(2.0), 1e-8);
}

TEST(Hardy, SFinite) {
  const double v = hardy_component(HardyKind::S, 0, Params(0.3, 0.6), ExactReal(rat(1)), ExactReal(rat(0)),
                                   profiles::constant(1, 10), 1.0);
  EXPECT_TRUE(std::isfinite(v));
  EXPECT_GT(v, 0);
}

TEST(Hardy, H0PowerProbe) {
  const Params p(0.3, 0.6);
  const double A = 1.0, x = 2.0, q = 0.5;
  const double v = hardy_component(HardyKind::H0, 0, p, ExactReal(rat(2)), ExactReal(rat(0)), profiles::power(A), x);
  EXPECT_NEAR(v, std::pow(x, q - A) / (2 * p.alpha + 2 - A), 1e-9);
}

TEST(AuxK, Scaling) {
  const Params p(0.3, 0.6);
  const ExactReal r(rat(2)), rho(rat(0));
  const double deg = -(2 * p.alpha + 1) + 0.5 - 1;
  const RadialProfile f = profiles::bump(0.5, 3);
  const double base = aux_k_operator(p, r, rho, f, 1.3);
  for (double s : {0.5, 4.0})
    EXPECT_LT(rel(aux_k_operator(p, r, rho, f.dilated(s), 1.3 * s), std::pow(s, deg + 2 * p.alpha + 2) * base), 1e-7);
}

TEST(AuxK, PowerProbeFiniteInsideAndGrowsOutside) {
  const Params p(0.3, 0.6);
  const ExactReal r(rat(2)), rho(rat(0));
  // convergence at 0 needs A < 2 alpha + 2, at infinity A > (rho+1)/r
  const double inside = aux_k_operator(p, r, rho, profiles::power(1.0), 1.0);
  EXPECT_TRUE(std::isfinite(inside));
  double prev = 0, prev_step = 0;
  bool growing = true;
  for (int L = 0; L <= 4; ++L) {
    const double v = aux_k_truncated(p, r, rho, profiles::power(0.25), 1.0, L);
    if (L > 0 && !(v - prev > 0.5 * prev_step && v > prev)) growing = false;
    if (L > 0) prev_step = v - prev;
    prev = v;
  }
  EXPECT_TRUE(growing);
}

TEST(AuxK, DecompositionComparable) {
  const Params p(0.3, 0.6);
  const RadialProfile f = profiles::bump(0.5, 3);
  for (auto [r, rho] : {std::pair{ExactReal(rat(2)), ExactReal(rat(0))}, std::pair{ExactReal(rat(1)), ExactReal(rat(0))}})
    for (double x : {0.3, 1.0, 2.0, 6.0}) {
      const double a = aux_k_operator(p, r, rho, f, x), h = hardy_decomposition(p, r, rho, f, x);
      EXPECT_GT(a / h, 1.0 / 50) << x;
      EXPECT_LT(a / h, 50.0) << x;
    }
}
