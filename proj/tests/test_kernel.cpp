#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <sphmean/kernel.hpp>

#include "oracles/oracle_values.hpp"

using namespace sphmean;

namespace {
double rel(double got, double want) { return std::fabs(got - want) / std::fabs(want); }
}  // namespace

TEST(Regime, Classification) {
  EXPECT_EQ(classify_regime(0.2, 1, 1.5), Regime::Vanishing);
  EXPECT_EQ(classify_regime(1, 1, 1.5), Regime::Interior);
  EXPECT_EQ(classify_regime(3, 1, 1.5), Regime::Exterior);
  EXPECT_EQ(classify_regime(0.5, 1, 1.5), Regime::BoundaryLower);
  EXPECT_EQ(classify_regime(2.5, 1, 1.5), Regime::BoundaryUpper);
  EXPECT_THROW(classify_regime(0, 1, 1), DomainError);
  EXPECT_THROW(classify_regime(1, -1, 1), DomainError);
}

TEST(Regime, SurfaceRejected) {
  const Params p(0.3, 0.6);
  EXPECT_THROW(kernel_legendre(p, 2.5, 1, 1.5), SingularSurfaceError);
  EXPECT_THROW(kernel_legendre(p, 0.5, 1, 1.5), SingularSurfaceError);
  EXPECT_THROW(kernel_oracle_quadrature(p, 2.5, 1, 1.5, QuadSpec{}), SingularSurfaceError);
}

TEST(KernelLegendre, ExplicitExamples) {
  EXPECT_NEAR(kernel_legendre(Params::parse("1/2", "0"), 2, 1, 1.5), 1.0 / 6, 1e-14);
  EXPECT_NEAR(kernel_legendre(Params::parse("-1/2", "1"), 4, 1, 1), 0.25, 1e-14);
  EXPECT_NEAR(*kernel_closed_form(Params::parse("1/2", "0"), 2, 1, 1.5), 1.0 / 6, 1e-15);
  EXPECT_NEAR(*kernel_closed_form(Params::parse("-1/2", "1"), 4, 1, 1), 0.25, 1e-15);
  EXPECT_NEAR(*kernel_closed_form(Params::parse("-1/2", "1"), 1, 1, 1), 0.5, 1e-15);
}

TEST(KernelLegendre, ClosedFormOnlyOnExplicitLines) {
  EXPECT_FALSE(kernel_closed_form(Params(0.3, 0.6), 1, 1, 1).has_value());
  EXPECT_FALSE(kernel_closed_form(Params(0.5, 0.0), 1, 1, 1).has_value());  // inexact input
  EXPECT_TRUE(kernel_closed_form(Params::parse("1/3", "-2/3"), 1, 1, 1).has_value());
}

TEST(KernelLegendre, GegenbauerOracle) {
  struct Case {
    double a, b, t, x, z, want;
  };
  for (const Case& c : {Case{0.3, 0.6, 1.7, 1, 1.2, oracle::kK_0_3_0_6_int}, Case{0.3, 1.4, 5, 0.7, 0.9, oracle::kK_0_3_1_4_ext},
                        Case{1, 0.25, 2.2, 1.5, 1, oracle::kK_1_0_25_int}, Case{1, 0.25, 3.1, 1.5, 1, oracle::kK_1_0_25_ext},
                        Case{-0.25, 2.5, 0.9, 0.6, 0.5, oracle::kK_m0_25_2_5_int},
                        Case{2, 0.5, 0.3, 2, 2.1, oracle::kK_2_0_5_int}})
    EXPECT_LT(rel(kernel_legendre(Params(c.a, c.b), c.t, c.x, c.z), c.want), 1e-10) << c.a << " " << c.b << " " << c.t;
}

TEST(KernelLegendre, ClosedFormsAgreeWithGenericNeighbours) {
  // half-integer alpha, -beta in N, 2 alpha + beta = 0
  struct Case {
    const char *a, *b;
  };
  for (const Case& c : {Case{"3/2", "2/5"}, Case{"1/2", "-3/5"}, Case{"7/10", "-1"}, Case{"1/3", "-2/3"}}) {
    const Params ex = Params::parse(c.a, c.b);
    for (auto [t, x, z] : {std::tuple{1.1, 1.0, 0.8}, std::tuple{2.5, 1.0, 0.8}}) {
      const auto cf = kernel_closed_form(ex, t, x, z);
      ASSERT_TRUE(cf.has_value());
      EXPECT_NEAR(*cf, kernel_legendre(ex, t, x, z), 1e-11 * std::max(1.0, std::fabs(*cf))) << c.a << " " << c.b << " " << t;
      const double lo = kernel_legendre(Params(ex.alpha - 1e-7, ex.beta), t, x, z);
      const double hi = kernel_legendre(Params(ex.alpha + 1e-7, ex.beta), t, x, z);
      EXPECT_NEAR(*cf, 0.5 * (lo + hi), 1e-5 * std::max(1.0, std::fabs(*cf))) << c.a << " " << c.b << " " << t;
    }
  }
}

TEST(KernelLegendre, Homogeneity) {
  const Params p(0.3, 0.6);
  // the measure y^{2 alpha + 1} dy fixes the degree
  for (auto [t, x, z] : {std::tuple{1.7, 1.0, 1.2}, std::tuple{5.0, 0.7, 0.9}})
    for (double c : {0.1, 3.0, 250.0})
      EXPECT_LT(rel(kernel_legendre(p, c * t, c * x, c * z), std::pow(c, -2 * p.alpha - 2) * kernel_legendre(p, t, x, z)),
                1e-12);
}

TEST(KernelLegendre, BitwiseSymmetric) {
  for (auto [a, b] : {std::pair{0.3, 0.6}, std::pair{-0.7, 1.9}, std::pair{1.4, -0.8}})
    for (auto [t, x, z] : {std::tuple{1.7, 1.0, 1.2}, std::tuple{5.0, 0.7, 0.9}, std::tuple{0.31, 2.0, 2.1}}) {
      const double u = kernel_legendre(Params(a, b), t, x, z), v = kernel_legendre(Params(a, b), t, z, x);
      EXPECT_EQ(std::memcmp(&u, &v, sizeof u), 0);
    }
}

TEST(KernelLegendre, ExactZeros) {
  EXPECT_EQ(kernel_legendre(Params(0.3, 0.6), 0.1, 1, 1.5), 0.0);
  // -beta in N: the exterior vanishes identically
  EXPECT_EQ(kernel_legendre(Params::parse("2", "-1"), 4, 1, 1.5), 0.0);
  EXPECT_EQ(kernel_legendre(Params::parse("1/3", "0"), 4, 1, 1.5), 0.0);
}

TEST(KernelOracle, AgreesWithLegendreForm) {
  const QuadSpec spec{1e-10};
  for (auto [a, b, t, x, z] : {std::tuple{0.3, 0.6, 1.7, 1.0, 1.2}, std::tuple{-0.3, 1.2, 3.0, 1.0, 0.9},
                               std::tuple{0.8, -0.4, 1.1, 1.0, 0.6}}) {
    const Params p(a, b);
    const double want = kernel_legendre(p, t, x, z);
    EXPECT_NEAR(kernel_oracle_quadrature(p, t, x, z, spec), want, 1e-8 * std::max(1.0, std::fabs(want))) << a << " " << b;
  }
}

TEST(Membership, Examples) {
  // alpha + beta < 1/2: half-integer alpha for P, beta = 1 for Q
  const ExceptionalMembership m1 = exceptional_membership(Params::parse("1/2", "-1/4"));
  EXPECT_TRUE(m1.in_E_P);
  EXPECT_FALSE(m1.in_E_Q);
  EXPECT_EQ(*m1.explicit_line, "alpha_half_integer");
  EXPECT_TRUE(exceptional_membership(Params::parse("-4/5", "1")).in_E_Q);
  // alpha + beta >= 1/2: -beta in N or 2 alpha + beta = 0
  const ExceptionalMembership m2 = exceptional_membership(Params::parse("-3/4", "3/2"));
  EXPECT_TRUE(m2.in_E_P);
  EXPECT_TRUE(m2.in_E_Q);
  EXPECT_EQ(*m2.explicit_line, "two_alpha_plus_beta_zero");
  const ExceptionalMembership m3 = exceptional_membership(Params::parse("3", "-2"));
  EXPECT_TRUE(m3.in_E_P);
  EXPECT_FALSE(m3.in_E_Q);
  EXPECT_EQ(*m3.explicit_line, "beta_nonpositive_integer");
  // on the line but below the threshold: not exceptional
  const ExceptionalMembership m4 = exceptional_membership(Params::parse("1/3", "-2/3"));
  EXPECT_FALSE(m4.in_E_P || m4.in_E_Q);
  EXPECT_FALSE(exceptional_membership(Params(0.3, 0.6)).explicit_line.has_value());
}

TEST(Zeros, OlverQExample) {
  const ZeroCount zc = count_legendre_zeros(Params::parse("-3/4", "5/4"), LegendreFunction::OlverQ);
  EXPECT_EQ(zc.predicted, 1);
  EXPECT_EQ(zc.observed, 1);
  ASSERT_EQ(zc.locations.size(), 1u);
  EXPECT_GT(zc.locations[0], 1.0);
}

TEST(Zeros, ObservedMatchesPredictedOnAGrid) {
  for (double a = -0.9; a <= 1.6; a += 0.25)
    for (double b = -1.9; b <= 2.6; b += 0.5) {
      if (a + b <= -0.45) continue;
      const Params p(a, b);
      for (LegendreFunction f : {LegendreFunction::FerrersP, LegendreFunction::OlverQ}) {
        const ZeroCount zc = count_legendre_zeros(p, f);
        if (zc.inconclusive) continue;
        if (zc.predicted_at_least) EXPECT_GE(zc.observed, 1) << a << " " << b;
        else EXPECT_EQ(zc.observed, zc.predicted) << a << " " << b << " " << (f == LegendreFunction::OlverQ);
      }
    }
}
