#include <gtest/gtest.h>

#include <sphmean/regions.hpp>

using namespace sphmean;
using namespace sphmean::regions;

namespace {
ExactReal X(const char* s) { return ExactReal::parse(s); }

MixedIndices idx(const char* p, const char* q, const char* r, const char* rho, const char* A = "0", const char* B = "0") {
  return MixedIndices::from_pq(p, q, X(r), X(rho), X(A), X(B));
}
}  // namespace

TEST(MixedIndicesParse, Reciprocals) {
  EXPECT_EQ(MixedIndices::parse_reciprocal("inf"), 0);
  EXPECT_EQ(MixedIndices::parse_reciprocal("4/3"), Rational(3, 4));
  EXPECT_THROW(MixedIndices::parse_reciprocal("1/2"), ConfigError);
  EXPECT_THROW(idx("2", "2", "1/2", "0"), ConfigError);
}

TEST(NormFinite, Examples) {
  EXPECT_TRUE(norm_finite(Params::parse("1/5", "1/5"), X("4"), X("0")));
  EXPECT_FALSE(norm_finite(Params::parse("1/5", "1/5"), X("10"), X("0")));  // equality is not enough
  EXPECT_TRUE(norm_finite(Params::parse("0", "0"), X("1"), X("7")));        // -beta = 0 waives the second clause
  EXPECT_FALSE(norm_finite(Params::parse("0", "1/2"), X("1"), X("7")));
}

TEST(ScalingExponent, Examples) {
  const Params p = Params::parse("0", "1");
  EXPECT_EQ(scaling_exponent(p, idx("2", "2", "2", "1")), 1);
  EXPECT_EQ(scaling_exponent(p, idx("4/3", "4", "2", "1")), 0);
  EXPECT_EQ(conditions_c1_c4(p, idx("2", "2", "2", "1")).per_condition.at("C2"), CondStatus::Fails);
}

TEST(Conditions, AdmissibleExample) {
  const Verdict v = conditions_c1_c4(Params::parse("0", "1"), idx("4/3", "4", "2", "1"));
  EXPECT_TRUE(v.admissible);
  EXPECT_FALSE(v.failure_witness.has_value());
  for (const char* c : {"C1", "C2", "C3", "C4"}) EXPECT_NE(v.per_condition.at(c), CondStatus::Fails) << c;
}

TEST(Conditions, CornerNeedsStrictC4) {
  // p = 1, q = inf, (rho + 1)/r = 1
  const Verdict v = conditions_c1_c4(Params::parse("0", "1"), idx("1", "inf", "1", "0"));
  EXPECT_EQ(v.per_condition.at("C4"), CondStatus::Fails);
  EXPECT_FALSE(v.admissible);
  ASSERT_TRUE(v.failure_witness.has_value());
}

TEST(Conditions, C3EqualityAllowedAtCorner) {
  // p = 1, q = inf, beta = 0, A at its upper bound
  const Verdict v = conditions_c1_c4(Params::parse("0", "0"), idx("1", "inf", "1", "3/2", "0", "0"));
  EXPECT_EQ(v.per_condition.at("C3"), CondStatus::HoldsWithEquality);
  const Verdict w = conditions_c1_c4(Params::parse("0", "1/3"), idx("1", "inf", "3/2", "1/2", "0", "0"));
  EXPECT_EQ(w.per_condition.at("C3"), CondStatus::Fails);  // beta + 1/r = 1 removes the allowance
}

TEST(Conditions, C4EquivalentToC4PrimeUnderC2) {
  const int N = 24;
  for (const char* a : {"0", "1/2", "-1/3"})
    for (auto [r, rho] : {std::pair{"1", "0"}, std::pair{"2", "1"}, std::pair{"3", "-1/2"}})
      for (const char* A : {"0", "1/4", "-1/2"}) {
        const Params p = Params::parse(a, "1");
        MixedIndices base = idx("2", "2", r, rho, A, "0");
        for (int i = 0; i <= N; ++i)
          for (int j = 0; j <= N; ++j) {
            const MixedIndices m = with_pq(base, Rational(i, N), Rational(j, N));
            if (scaling_exponent(p, m) != 0) continue;
            const bool c4 = conditions_c1_c4(p, m).per_condition.at("C4") != CondStatus::Fails;
            EXPECT_EQ(c4, condition_c4_prime(p, m)) << a << " " << r << " " << rho << " " << A << " " << i << " " << j;
          }
      }
}

TEST(DomainInclusion, Examples) {
  EXPECT_FALSE(domain_inclusion(Params::parse("0", "1"), idx("2", "2", "1", "-1")));
  // left bound equals 0 here and is strict for p = 2
  EXPECT_FALSE(domain_inclusion(Params::parse("0", "1"), idx("2", "2", "1", "0", "0")));
  EXPECT_TRUE(domain_inclusion(Params::parse("0", "1"), idx("2", "2", "1", "0", "1/2")));
  // p = 1, beta = 0: both bounds weak; left bound (rho+1)/r - 2 alpha - 2 = -1
  EXPECT_TRUE(domain_inclusion(Params::parse("0", "0"), idx("1", "2", "1", "0", "-1")));
  EXPECT_FALSE(domain_inclusion(Params::parse("0", "1/2"), idx("1", "2", "2", "1", "-2")));
}

TEST(DomainInclusion, MonotoneBetweenBounds) {
  const Params p = Params::parse("1/3", "1/2");
  // sweep A: admissible values form an interval
  int transitions = 0;
  bool prev = false;
  for (int k = -40; k <= 40; ++k) {
    MixedIndices m = idx("3/2", "2", "2", "0");
    m.A = Rational(k, 8);
    const bool v = domain_inclusion(p, m);
    if (k > -40 && v != prev) ++transitions;
    prev = v;
  }
  EXPECT_EQ(transitions, 2);
}

TEST(Hardy, Examples) {
  // p = q = 1 is not the p = q' = 1 corner, so a < 1/p' stays strict
  EXPECT_FALSE(hardy_admissible(0, -1, 1, 1, HardyWhich::Hardy));
  EXPECT_TRUE(hardy_admissible(0, 0, 1, 0, HardyWhich::Hardy));  // p = 1, q = inf, a = 1/p'
  EXPECT_FALSE(hardy_admissible(1, Rational(1, 2), Rational(1, 2), Rational(1, 2), HardyWhich::Hardy));
  EXPECT_TRUE(hardy_admissible(0, 0, 1, 0, HardyWhich::DualHardy));  // b = -1/q at the corner
  EXPECT_FALSE(hardy_admissible(Rational(1, 2), Rational(-1, 2), Rational(1, 2), Rational(1, 2), HardyWhich::DualHardy));
}

TEST(ExchangeOfNorms, QAtMostR) {
  EXPECT_TRUE(exchange_of_norms_valid(idx("2", "2", "2", "0")));
  EXPECT_TRUE(exchange_of_norms_valid(idx("2", "3/2", "2", "0")));
  EXPECT_FALSE(exchange_of_norms_valid(idx("2", "3", "2", "0")));
  EXPECT_FALSE(exchange_of_norms_valid(idx("2", "inf", "5", "0")));
}

TEST(Scan, EmptySet) {
  const ScanResult s = admissible_set_scan(Params::parse("0", "1"), X("5"), X("0"), X("1"), X("0"), 12);
  EXPECT_EQ(s.shape, Shape::S5);
  EXPECT_TRUE(s.points.empty());
  EXPECT_TRUE(s.grid_consistent);
}

TEST(Scan, LowerRightVertexOnly) {
  const ScanResult s = admissible_set_scan(Params::parse("0", "1"), X("0"), X("0"), X("1"), X("1"), 12);
  EXPECT_EQ(s.shape, Shape::S4);
  ASSERT_EQ(s.points.size(), 1u);
  EXPECT_EQ(s.points[0], std::make_pair(Rational(1), Rational(0)));
}

TEST(Scan, SegmentExample) {
  const ScanResult s = admissible_set_scan(Params::parse("0", "1"), X("0"), X("0"), X("2"), X("1"), 24);
  EXPECT_EQ(s.exact.kappa, Rational(-1, 2));
  EXPECT_EQ(s.exact.lo, Rational(1, 2));
  EXPECT_EQ(s.exact.hi, Rational(1));
  EXPECT_FALSE(s.exact.lo_included);
  EXPECT_FALSE(s.exact.hi_included);
  EXPECT_EQ(s.shape, Shape::S2);
  EXPECT_TRUE(s.grid_consistent);
  for (const auto& [ip, iq] : s.points) EXPECT_EQ(iq, ip - Rational(1, 2));
}

TEST(Scan, GridAgreesWithExactSetAcrossParameters) {
  for (const char* a : {"-1/3", "0", "1"})
    for (const char* b : {"0", "1/2", "1", "2"})
      for (auto [A, B] : {std::pair{"0", "0"}, std::pair{"1/2", "-1/4"}, std::pair{"-1", "1/3"}}) {
        const ScanResult s = admissible_set_scan(Params::parse(a, b), X(A), X(B), X("2"), X("0"), 24);
        EXPECT_TRUE(s.grid_consistent) << a << " " << b << " " << A << " " << B;
        EXPECT_NE(s.shape, Shape::Unclassified) << a << " " << b << " " << A << " " << B;
      }
  EXPECT_THROW(admissible_set_scan(Params::parse("0", "1"), X("0"), X("0"), X("2"), X("1"), 1001), ConfigError);
}
