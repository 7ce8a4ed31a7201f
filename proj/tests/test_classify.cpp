#include <gtest/gtest.h>

#include <set>

#include "beatty_lab/classify.hpp"
#include "support/oracle.hpp"

using namespace beatty_lab;
using oracle::Hp;

namespace {

const Hp kPhi = Hp::phi();
const Hp kSqrt5 = Hp::sqrt(Hp(5));

std::int64_t oracle_d(std::int64_t k) { return 3 * oracle::a(k) + k; }
std::int64_t oracle_c(std::int64_t k) { return oracle::a(k) + 2 * k - 1; }
std::int64_t oracle_s(std::int64_t k) { return k % 2 == 0 ? oracle_c(k / 2) + 1 : oracle_c((k + 1) / 2) - 1; }
Hp hp_frac(std::int64_t v) { return (Hp(static_cast<long>(v)) * kPhi).frac(); }
char hp_label(std::int64_t m) { return hp_frac(m) > Hp(1) / (kPhi * kPhi) ? 'A' : 'B'; }

RowClass rc(const char* s) {
  auto l = [](char c) { return c == 'A' ? ABLabel::A : ABLabel::B; };
  return {l(s[0]), l(s[1]), l(s[2])};
}

}  // namespace

TEST(Scd, ExamplesFromTheTable) {
  EXPECT_EQ(scd(1), (SCDTriple{1, 1, 2, 4}));
  EXPECT_EQ(scd(4), (SCDTriple{4, 7, 13, 22}));
  EXPECT_EQ(scd(6), (SCDTriple{6, 10, 20, 33}));
  EXPECT_THROW(scd(0), DomainError);
}

TEST(Scd, ColumnsMatchPartitionEngine) {
  const Columns cols = build_columns(PartitionSpec::phi_extension(3), 30000);
  for (std::size_t i = 0; i < cols.columns[0].size(); ++i) {
    ASSERT_EQ(column_d(static_cast<std::int64_t>(i + 1)), cols.columns[0][i]);
  }
  for (std::size_t i = 0; i < cols.columns[1].size(); ++i) {
    ASSERT_EQ(column_c(static_cast<std::int64_t>(i + 1)), cols.columns[1][i]);
  }
  for (std::size_t i = 0; i < cols.columns[2].size(); ++i) {
    ASSERT_EQ(column_s(static_cast<std::int64_t>(i + 1)), cols.columns[2][i]);
  }
}

TEST(Scd, ColumnCGapsAreThreeOrFour) {
  for (std::int64_t k = 1; k <= 10000; ++k) {
    const std::int64_t gap = oracle_c(k + 1) - oracle_c(k);
    ASSERT_TRUE(gap == 3 || gap == 4) << k;
    ASSERT_EQ(column_c(k + 1) - column_c(k), gap);
  }
}

TEST(Scd, EveryIntegerIsInAOrAPlusOne) {
  const auto A = oracle::values_up_to(oracle::a, 10001);
  for (std::int64_t m = 1; m <= 10000; ++m) ASSERT_TRUE(A.count(m) || A.count(m - 1)) << m;
}

TEST(FracD3, ExamplesAndHighPrecision) {
  const QuadraticReal s5_over_phi2 = golden::sqrt5() / golden::phi_squared();
  EXPECT_EQ(frac_d3(1), QuadraticReal(1) - s5_over_phi2 * (golden::phi() - QuadraticReal(1)));
  EXPECT_EQ(frac_d3(2), (QuadraticReal(11) * golden::phi()).frac());
  for (std::int64_t k = 1; k <= 10000; ++k) {
    const QuadraticReal v = frac_d3(k);
    ASSERT_EQ(v, (QuadraticReal(static_cast<long>(oracle_d(k))) * golden::phi()).frac()) << k;
    if (k % 11 == 0) ASSERT_TRUE(close(Hp::of(v), hp_frac(oracle_d(k)))) << k;
    const bool below = oracle::frac_n_phi(k) < (Hp(5) + kSqrt5) / Hp(10);
    if (below) ASSERT_GT(v, golden::inv_phi_squared()) << k;
  }
}

TEST(FracC3, ExamplesAndHighPrecision) {
  EXPECT_EQ(frac_c3(1).side, InvSqrt5Side::Above);
  EXPECT_EQ(c3_plus_phi_d3(1).first, QuadraticReal(1));
  EXPECT_EQ(frac_c3(2).side, InvSqrt5Side::Below);
  EXPECT_EQ(c3_plus_phi_d3(2).first, QuadraticReal(2));
  const bool three_below = oracle::frac_n_phi(3) < Hp(1) / kSqrt5;
  EXPECT_EQ(frac_c3(3).side == InvSqrt5Side::Below, three_below);

  for (std::int64_t k = 1; k <= 10000; ++k) {
    const C3Frac c = frac_c3(k);
    ASSERT_EQ(c.value, (QuadraticReal(static_cast<long>(oracle_c(k))) * golden::phi()).frac()) << k;
    const auto [sum, expected] = c3_plus_phi_d3(k);
    ASSERT_EQ(sum, expected) << k;
    if (k % 11 == 0) {
      const Hp direct = hp_frac(oracle_c(k)) + kPhi * hp_frac(oracle_d(k));
      ASSERT_TRUE(close(direct, Hp(oracle::frac_n_phi(k) > Hp(1) / kSqrt5 ? 1 : 2))) << k;
    }
  }
}

TEST(FracS3, Examples) {
  const S3Frac one = frac_s3(1);
  EXPECT_EQ(one.value, golden::phi() - QuadraticReal(1));
  EXPECT_TRUE(one.offset_in_set);
  const S3Frac two = frac_s3(2);
  EXPECT_EQ(two.value, (QuadraticReal(static_cast<long>(oracle_s(2))) * golden::phi()).frac());
  EXPECT_TRUE(two.holds());
  EXPECT_EQ(s3_offsets(true).size(), 3u);
  EXPECT_EQ(s3_offsets(false).size(), 5u);
}

TEST(FracS3, OffsetsLieInTheParitySetUpTo10000) {
  std::set<std::pair<bool, std::string>> seen;
  const Hp slope = (Hp(5) - kSqrt5) / Hp(4);
  for (std::int64_t k = 1; k <= 10000; ++k) {
    const S3Frac s = frac_s3(k);
    ASSERT_TRUE(s.holds()) << k << " offset " << s.offset.to_string() << " predicted " << s.predicted.to_string();
    ASSERT_EQ(s.value, (QuadraticReal(static_cast<long>(oracle_s(k))) * golden::phi()).frac()) << k;
    if (k % 17 == 0) {
      ASSERT_TRUE(close(Hp::of(s.offset), hp_frac(oracle_s(k)) - slope * oracle::frac_n_phi(k))) << k;
    }
    seen.emplace(k % 2 == 0, s.offset.to_string());
  }
  EXPECT_EQ(seen.size(), 8u);  // every offset of both parity sets is realized
}

TEST(RowClassTest, ExamplesFromTheTable) {
  EXPECT_EQ(row_class(1), rc("ABA"));
  EXPECT_EQ(row_class(2), rc("AAA"));
  EXPECT_EQ(row_class(3), rc("BAB"));
  EXPECT_EQ(row_class(4), rc("BBA"));
  EXPECT_EQ(row_class(5), rc("AAA"));
  EXPECT_EQ(row_class(6), rc("BBA"));
  EXPECT_EQ(row_class(1).to_string(), "ABA");
}

TEST(RowClassTest, MatchesHighPrecisionLabelsAndBreakpoints) {
  for (std::int64_t k = 1; k <= 20000; ++k) {
    const RowClass r = row_class(k);
    if (k % 7 == 0) {
      const std::string expected{hp_label(oracle_s(k)), hp_label(oracle_c(k)), hp_label(oracle_d(k))};
      ASSERT_EQ(r.to_string(), expected) << k;
    }
    ASSERT_TRUE(r.admissible()) << k;
    ASSERT_EQ(std::make_pair(r.c, r.d), cd_class_from_breakpoints(k)) << k;
  }
}

TEST(RowClassTest, BreakpointIntervalsSumToOne) {
  const QuadraticReal first = golden::inv_sqrt5();
  const QuadraticReal second = golden::cd_breakpoint() - golden::inv_sqrt5();
  const QuadraticReal third = QuadraticReal(1) - golden::cd_breakpoint();
  EXPECT_GT(second, QuadraticReal(0));
  EXPECT_EQ(first + second + third, QuadraticReal(1));
}

TEST(RowCensusTest, SmallN) {
  const RowCensus six = row_class_census(6);
  EXPECT_EQ(six.counts.at(rc("AAA")), 2);
  EXPECT_EQ(six.counts.at(rc("ABA")), 1);
  EXPECT_EQ(six.counts.at(rc("BAB")), 1);
  EXPECT_EQ(six.counts.at(rc("BBA")), 2);
  EXPECT_EQ(six.counts.size(), 4u);
  const RowCensus one = row_class_census(1);
  EXPECT_EQ(one.counts.size(), 1u);
  EXPECT_EQ(one.counts.at(rc("ABA")), 1);
  EXPECT_THROW(row_class_census(0), DomainError);
}

TEST(RowCensusTest, AllSixClassesAndNoOthersUpTo100000) {
  const RowCensus census = row_class_census(100000, 4);
  EXPECT_TRUE(census.only_admissible());
  EXPECT_EQ(census.counts.size(), 6u);
  for (const RowClass& r : admissible_row_classes()) {
    ASSERT_TRUE(census.first_k.count(r)) << r.to_string();
    EXPECT_EQ(row_class(census.first_k.at(r)), r);
    for (std::int64_t k = 1; k < census.first_k.at(r); ++k) ASSERT_NE(row_class(k), r);
  }
  EXPECT_FALSE(census.counts.count(rc("ABB")));
  EXPECT_FALSE(census.counts.count(rc("BBB")));
}

TEST(RowCensusTest, ShardCountDoesNotChangeResult) {
  const RowCensus one = row_class_census(5000, 1);
  for (unsigned shards : {2u, 3u, 8u}) {
    const RowCensus many = row_class_census(5000, shards);
    EXPECT_EQ(many.counts, one.counts);
    EXPECT_EQ(many.first_k, one.first_k);
  }
}

TEST(ScdLookupTest, Examples) {
  EXPECT_EQ(scd_lookup(1), SCDLabel::S);
  EXPECT_EQ(scd_lookup(2), SCDLabel::C);
  EXPECT_EQ(scd_lookup(4), SCDLabel::D);
  EXPECT_THROW(scd_lookup(0), DomainError);
}

TEST(ScdLookupTest, AgreesWithTableAndSetOracle) {
  const std::int64_t N = 100000;
  const ScdTable table(N);
  std::set<std::int64_t> D, C;
  for (std::int64_t k = 1; oracle_d(k) <= N; ++k) D.insert(oracle_d(k));
  for (std::int64_t k = 1; oracle_c(k) <= N; ++k) C.insert(oracle_c(k));
  for (std::int64_t m = 1; m <= N; ++m) {
    const SCDLabel expected = D.count(m) ? SCDLabel::D : C.count(m) ? SCDLabel::C : SCDLabel::S;
    ASSERT_EQ(table(m), expected) << m;
    if (m % 9 == 0) ASSERT_EQ(scd_lookup(m), expected) << m;
  }
  EXPECT_TRUE(verify_partition(PartitionSpec::phi_extension(3), N).ok());
}

TEST(PairCensusTest, FrequenciesAt100000) {
  const PairCensus census = ab_over_scd_census(100000, 4);
  const auto freq = [&](SCDLabel x, SCDLabel y) {
    return static_cast<double>(census.counts.at({x, y})) / static_cast<double>(census.N);
  };
  using L = SCDLabel;
  EXPECT_EQ(census.counts.size(), 9u);
  EXPECT_EQ(census.counts.at({L::D, L::C}), 0);
  EXPECT_EQ(census.counts.at({L::C, L::C}), 0);
  EXPECT_EQ(census.counts.at({L::D, L::D}), 0);
  EXPECT_EQ(census.counts.at({L::S, L::D}), 0);
  const double phi = (1 + std::sqrt(5.0)) / 2;
  EXPECT_NEAR(freq(L::S, L::C), 0.2, 0.01);
  EXPECT_NEAR(freq(L::C, L::S), 0.2, 0.01);
  EXPECT_NEAR(freq(L::D, L::S), 0.2, 0.01);
  EXPECT_NEAR(freq(L::C, L::D), (phi - 1) / 5, 0.01);
  EXPECT_NEAR(freq(L::S, L::S), (3 - phi) / 5, 0.01);
}

TEST(PairCensusTest, MatchesDirectOracle) {
  const std::int64_t N = 3000;
  const PairCensus census = ab_over_scd_census(N, 3);
  std::set<std::int64_t> D, C;
  for (std::int64_t k = 1; oracle_d(k) <= oracle::b(N); ++k) D.insert(oracle_d(k));
  for (std::int64_t k = 1; oracle_c(k) <= oracle::b(N); ++k) C.insert(oracle_c(k));
  auto label = [&](std::int64_t m) { return D.count(m) ? SCDLabel::D : C.count(m) ? SCDLabel::C : SCDLabel::S; };
  std::map<SCDPair, std::int64_t> expected;
  for (std::int64_t n = 1; n <= N; ++n) ++expected[{label(oracle::a(n)), label(oracle::b(n))}];
  for (const auto& [pair, count] : expected) EXPECT_EQ(census.counts.at(pair), count) << to_string(pair);
}

TEST(DensityTest, KnownDensitiesAt100000) {
  const DensityReport d = measure_densities(100000, 4);
  const double phi = (1 + std::sqrt(5.0)) / 2;
  EXPECT_NEAR(d.c_half_in_a.approx(), 0.5, 0.01);
  EXPECT_NEAR(d.a_in_c.approx(), 1 / phi, 0.01);
  EXPECT_NEAR(d.a_in_d.approx(), 1 / (phi * phi), 0.01);
  EXPECT_EQ(d.a_in_c.count + d.a_in_d.count, 100000);
  EXPECT_GT(d.s_in_a.count, 0);
  EXPECT_EQ(d.s_in_a.total, 100000);
}

TEST(FrequencyTest, ReducedFraction) {
  const Frequency f = make_frequency(20, 100);
  EXPECT_EQ(f.num, 1);
  EXPECT_EQ(f.den, 5);
  EXPECT_EQ(f.decimal(), "~0.200000");
  const Frequency z = make_frequency(0, 0);
  EXPECT_EQ(z.den, 1);
}
