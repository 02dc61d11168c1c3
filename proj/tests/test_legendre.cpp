#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sphmean/legendre.hpp>

#include "oracles/oracle_values.hpp"

using namespace sphmean;

namespace {
constexpr double kPi = 3.14159265358979323846;
double rel(double got, double want) { return std::fabs(got - want) / std::fabs(want); }
}  // namespace

TEST(FerrersP, ExplicitLineValues) {
  EXPECT_NEAR(ferrers_p(Params::parse("0", "0"), 0.0), std::sqrt(2 / kPi), 1e-14);
  EXPECT_NEAR(ferrers_p(Params::parse("-1/2", "2"), 0.0), 1.0, 1e-14);
}

TEST(FerrersP, GenericAgainstOracle) {
  EXPECT_LT(rel(ferrers_p(Params(0.3, 0.7), 0.25), oracle::kP_0_3_0_7_0_25), 1e-9);
  EXPECT_LT(rel(ferrers_p(Params(1.2, -0.4), -0.6), oracle::kP_1_2_m0_4_m0_6), 1e-9);
  EXPECT_LT(rel(ferrers_p(Params(-0.7, 1.5), 0.9), oracle::kP_m0_7_1_5_0_9), 1e-9);
  EXPECT_LT(rel(ferrers_p(Params(0.45, 0.1), -0.999), oracle::kP_0_45_0_1_m0_999), 1e-9);
}

TEST(FerrersP, RejectsOutsideInterval) {
  const Params p(0.3, 0.7);
  EXPECT_THROW(ferrers_p(p, 1.0), DomainError);
  EXPECT_THROW(ferrers_p(p, -1.2), DomainError);
}

TEST(FerrersP, BetaZeroIsElementary) {
  for (const char* a : {"4/5", "-1/3", "2"}) {
    const Params p = Params::parse(a, "0");
    for (double y : {-0.7, 0.0, 0.4, 0.95}) {
      const double lhs = ferrers_p(p, y) * std::tgamma(p.alpha + 0.5) * std::pow(2.0, p.alpha - 0.5);
      EXPECT_NEAR(lhs, std::pow(1 - y * y, (p.alpha - 0.5) / 2), 1e-10) << a << " " << y;
    }
  }
}

TEST(FerrersP, ContinuityAcrossHalfIntegerAlpha) {
  for (const char* a : {"1/2", "3/2"})
    for (const char* b : {"-2/5", "1/3", "6/5"}) {
      const Params ex = Params::parse(a, b);
      const Params lo(ex.alpha - 1e-6, ex.beta), hi(ex.alpha + 1e-6, ex.beta);
      for (double y : {-0.6, 0.1, 0.8}) {
        const double v = ferrers_p(ex, y), vl = ferrers_p(lo, y), vh = ferrers_p(hi, y);
        EXPECT_NEAR(v, 0.5 * (vl + vh), 1e-5 * std::max(1.0, std::fabs(v))) << a << " " << b << " " << y;
      }
    }
}

TEST(OlverQ, ExplicitLineValues) {
  EXPECT_NEAR(olver_q(Params::parse("0", "0"), std::sqrt(2.0)), std::sqrt(kPi / 2), 1e-13);
  EXPECT_NEAR(olver_q(Params::parse("-1/2", "2"), 3.0), 0.5 * (1 / std::sqrt(2.0) + std::sqrt(2.0)), 1e-13);
}

TEST(OlverQ, GenericAgainstOracle) {
  EXPECT_LT(rel(olver_q(Params(0.3, 0.7), 1.5), oracle::kQ_0_3_0_7_1_5), 1e-9);
  EXPECT_LT(rel(olver_q(Params(1.2, -0.4), 7.0), oracle::kQ_1_2_m0_4_7), 1e-9);
  EXPECT_LT(rel(olver_q(Params(-0.7, 1.5), 1.0001), oracle::kQ_m0_7_1_5_1_0001), 1e-9);
  EXPECT_LT(rel(olver_q(Params(0.45, 0.1), 30.0), oracle::kQ_0_45_0_1_30), 1e-9);
}

TEST(OlverQ, RejectsArgumentAtMostOne) { EXPECT_THROW(olver_q(Params(0.3, 0.7), 1.0), DomainError); }

TEST(OlverQ, LeadingPowerAtInfinity) {
  for (auto [a, b] : {std::pair{0.3, 0.7}, std::pair{1.2, -0.4}, std::pair{-0.6, 1.9}}) {
    const Params p(a, b);
    const double r2 = olver_q(p, 1e2) * std::pow(1e2, a + 0.5);
    const double r3 = olver_q(p, 1e3) * std::pow(1e3, a + 0.5);
    const double r4 = olver_q(p, 1e4) * std::pow(1e4, a + 0.5);
    EXPECT_NE(r4, 0.0);
    EXPECT_LT(rel(r3, r4), 0.02);
    EXPECT_LT(rel(r2, r4), 0.02);
  }
}

TEST(Asymptotics, RegularEndpointOfP) {
  const AsymptoticCase c = endpoint_asymptotic(Params(1.0, 1.0), LegendreFunction::FerrersP, Endpoint::PlusOneMinus);
  EXPECT_DOUBLE_EQ(c.exponent, 0.75);
  EXPECT_EQ(c.sign, 1);
  EXPECT_FALSE(c.logarithmic);
}

TEST(Asymptotics, LogarithmicCase) {
  const AsymptoticCase c = endpoint_asymptotic(Params(0.2, 0.3), LegendreFunction::FerrersP, Endpoint::MinusOnePlus);
  EXPECT_TRUE(c.logarithmic);
  EXPECT_EQ(c.exponent, 0.0);
  EXPECT_FALSE(c.exceptional);
}

TEST(Asymptotics, ExceptionalHalfInteger) {
  const AsymptoticCase c =
      endpoint_asymptotic(Params::parse("1/2", "-0.4"), LegendreFunction::FerrersP, Endpoint::MinusOnePlus);
  EXPECT_TRUE(c.exceptional);
  EXPECT_NEAR(c.exponent, 0.2, 1e-15);
  EXPECT_EQ(c.sign, 1);
}

TEST(Asymptotics, LogarithmicNeverExceptional) {
  for (double a : {-0.7, -0.2, 0.1, 0.6, 1.4})
    for (double b : {-0.5, 0.0, 0.4, 1.0, 2.2}) {
      if (a + b <= -0.5) continue;
      const Params p(a, b);
      for (auto [f, e] : {std::pair{LegendreFunction::FerrersP, Endpoint::PlusOneMinus},
                          std::pair{LegendreFunction::FerrersP, Endpoint::MinusOnePlus},
                          std::pair{LegendreFunction::OlverQ, Endpoint::OnePlus},
                          std::pair{LegendreFunction::OlverQ, Endpoint::Infinity}}) {
        const AsymptoticCase c = endpoint_asymptotic(p, f, e);
        if (c.logarithmic) {
          EXPECT_EQ(c.exponent, 0.0);
          EXPECT_FALSE(c.exceptional);
        }
      }
    }
}

TEST(Asymptotics, ExceptionalFlagFollowsSets) {
  const Params p = Params::parse("-4/5", "1");  // alpha + beta < 1/2 and beta = 1
  EXPECT_TRUE(exceptional_sets(p).in_E_Q);
  EXPECT_TRUE(endpoint_asymptotic(p, LegendreFunction::OlverQ, Endpoint::OnePlus).exceptional);
  const Params g(-0.8, 1.0);  // same numbers, no exactness
  EXPECT_FALSE(exceptional_sets(g).in_E_Q);
}

TEST(Asymptotics, PowerLawNearPlusOne) {
  // (1-y)^{-e} P(y) settles as y -> 1
  const Params p(0.9, 0.6);
  const AsymptoticCase c = endpoint_asymptotic(p, LegendreFunction::FerrersP, Endpoint::PlusOneMinus);
  const double v1 = ferrers_p(p, 1 - 1e-6) / std::pow(1e-6, c.exponent);
  const double v2 = ferrers_p(p, 1 - 1e-8) / std::pow(1e-8, c.exponent);
  EXPECT_LT(rel(v1, v2), 1e-3);
  EXPECT_EQ(v2 > 0 ? 1 : -1, c.sign);
}
