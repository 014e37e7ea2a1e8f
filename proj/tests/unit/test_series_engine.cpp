/*
 * Copyright 2026 The skewtop Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <random>

#include "skewtop/intersections.hpp"
#include "skewtop/multi_series.hpp"
#include "skewtop/oracle/oracle.hpp"
#include "skewtop/series_engine.hpp"

namespace skewtop {
namespace {

MultiSeries random_series(std::size_t nv, int order, std::mt19937_64& rng, bool constant) {
  std::uniform_int_distribution<int> coef(-4, 4);
  MultiSeries s(nv, order);
  if (constant) s.add_term(Exponents(nv, 0), Rational(1));
  for (int t = 0; t < 8; ++t) {
    Exponents e(nv, 0);
    int deg = 0;
    for (auto& x : e) {
      x = std::uniform_int_distribution<int>(0, 2)(rng);
      deg += x;
    }
    if (deg == 0 || deg > order) continue;
    s.add_term(e, make_rational(coef(rng), 1 + std::abs(coef(rng))));
  }
  return s;
}

TEST(MultiSeries, TruncatesProducts) {
  const MultiSeries x = MultiSeries::variable(2, 3, 0);
  const MultiSeries y = MultiSeries::variable(2, 3, 1);
  const MultiSeries p = (x + y) * (x + y) * (x + y) * (x + y);
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(((x + y) * (x + y)).coefficient({1, 1}), Rational(2));
}

TEST(MultiSeries, LogExpRoundTrip) {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 10; ++t) {
    const MultiSeries z = random_series(3, 6, rng, true);
    EXPECT_EQ(exp_series(log_series(z)), z);
    const MultiSeries w = random_series(2, 7, rng, false);
    EXPECT_EQ(log_series(exp_series(w)), w);
  }
}

TEST(MultiSeries, LogNeedsUnitConstant) {
  MultiSeries z(1, 4);
  z.add_term({1}, Rational(1));
  EXPECT_THROW(log_series(z), DomainError);
}

TEST(MultiSeries, ParityAndSymmetry) {
  MultiSeries s(2, 6);
  s.add_term({2, 0}, Rational(1));
  s.add_term({0, 2}, Rational(1));
  EXPECT_TRUE(s.is_even_in_each_variable());
  EXPECT_TRUE(s.is_symmetric());
  s.add_term({3, 1}, Rational(1));
  EXPECT_FALSE(s.is_even_in_each_variable());
  EXPECT_FALSE(s.is_symmetric());
}

TEST(Partitions, CountsAndCharacters) {
  EXPECT_EQ(partitions(6).size(), 11u);
  EXPECT_EQ(partitions(8, 8, 2).size(), 5u);
  // chi^{(2,1)} on cycle types (1,1,1), (2,1), (3).
  EXPECT_EQ(character({2, 1}, {1, 1, 1}), 2);
  EXPECT_EQ(character({2, 1}, {2, 1}), 0);
  EXPECT_EQ(character({2, 1}, {3}), -1);
  EXPECT_EQ(z_rho({2, 2, 1}), 8);
}

TEST(Partitions, ColumnOrthogonality) {
  for (int n = 1; n <= 6; ++n) {
    const auto ps = partitions(n);
    for (const auto& rho : ps) {
      BigInt sum = 0;
      for (const auto& lam : ps) sum += character(lam, rho) * character(lam, rho);
      EXPECT_EQ(sum, z_rho(rho));
    }
  }
}

TEST(SeriesEngine, OneDimensionalExpectationsStartAtOne) {
  for (int j = 0; j < 3; ++j) EXPECT_EQ(one_dim_expectations(j, 4).front(), Rational(1));
}

TEST(SeriesEngine, KTwoMatchesDirectExpansionOracle) {
  EXPECT_EQ(partition_series(2, 12), oracle::direct_partition_k2(12));
}

TEST(SeriesEngine, PartitionSeriesIsEvenAndSymmetric) {
  for (int k = 2; k <= 4; ++k) {
    const MultiSeries z = partition_series(k, 8);
    EXPECT_TRUE(z.is_even_in_each_variable()) << k;
    EXPECT_TRUE(z.is_symmetric()) << k;
    EXPECT_EQ(z.constant_term(), Rational(1));
  }
}

TEST(SeriesEngine, PowerSumRoundTrip) {
  const MultiSeries z = partition_series(4, 8);
  const PowerSumSeries ps = to_power_sums(z);
  EXPECT_EQ(expand_power_sums(ps, 4), z);
  EXPECT_EQ(ps.series, partition_power_sums(4, 8).series);
}

TEST(SeriesEngine, FreeEnergyLowOrders) {
  const PowerSumSeries f = to_power_sums(log_series(partition_series(2, 4)));
  EXPECT_EQ(f.coefficient({4}), make_rational(1, 72));
  EXPECT_EQ(f.coefficient({2, 2}), make_rational(1, 12));
  EXPECT_EQ(f.terms().size(), 2u);
}

TEST(SeriesEngine, FreeEnergyOrderEight) {
  const PowerSumSeries f = universal_free_energy(8);
  const std::map<std::vector<int>, Rational> expected = {
      {{4}, make_rational(1, 72)},        {{2, 2}, make_rational(1, 12)},       {{8}, make_rational(5, 432)},
      {{4, 4}, make_rational(1, 432)},    {{4, 2, 2}, make_rational(1, 36)},    {{2, 2, 2, 2}, make_rational(-1, 108)},
  };
  EXPECT_EQ(f.terms(), expected);
}

TEST(SeriesEngine, FreeEnergyIsIndependentOfK) {
  const auto f2 = to_power_sums(log_series(partition_series(2, 4))).terms();
  const auto f3 = to_power_sums(log_series(partition_series(3, 6))).terms();
  const auto f4 = to_power_sums(log_series(partition_series(4, 8))).terms();
  for (const auto& [ms, c] : f2) {
    EXPECT_EQ(f3.at(ms), c);
    EXPECT_EQ(f4.at(ms), c);
  }
  for (const auto& [ms, c] : f3) EXPECT_EQ(f4.at(ms), c);
}

TEST(SeriesEngine, SinglePowerSumCoefficients) {
  const PowerSumSeries f = universal_free_energy(24);
  EXPECT_EQ(f.coefficient({12}), Rational(0));
  EXPECT_EQ(f.coefficient({16}), make_rational(455, 93312));
  EXPECT_EQ(f.coefficient({20}), make_rational(-6545, 2519424));
  EXPECT_EQ(f.coefficient({24}), Rational(0));
}

TEST(SeriesEngine, Guards) {
  EXPECT_THROW(partition_series(2, 18), GuardError);
  EXPECT_THROW(universal_free_energy(26), GuardError);
}

TEST(Intersections, TVariableNormalization) {
  const TVariable t{2, 1};
  EXPECT_EQ(t.power(), 8);
  EXPECT_EQ(t.pochhammer(), 10);
  EXPECT_EQ(TVariable::from_power(8).n, 2);
  EXPECT_EQ((TVariable{1, 0}.three_exponent()), Rational(-1));
}

TEST(Intersections, GenusFromLabels) {
  EXPECT_EQ(genus_of({{1, 0, 1}}), Rational(1));
  EXPECT_EQ(genus_of({{0, 1, 2}}), make_rational(1, 2));
  EXPECT_EQ(genus_of({{2, 1, 1}}), make_rational(3, 2));
}

TEST(Intersections, LowGenusNumbers) {
  const IntersectionTable table = extract_intersections(universal_free_energy(8));
  const auto* a = table.find({{1, 0, 1}});
  const auto* b = table.find({{0, 1, 2}});
  const auto* c = table.find({{2, 1, 1}});
  const auto* d = table.find({{1, 0, 2}});
  ASSERT_TRUE(a && b && c && d);
  EXPECT_EQ(a->value, make_rational(1, 24));
  EXPECT_EQ(b->value, make_rational(1, 6));
  EXPECT_EQ(c->value, make_rational(1, 864));
  EXPECT_EQ(d->value, make_rational(1, 24));
  EXPECT_EQ(d->genus, Rational(1));
  EXPECT_NE(d->note.find("0"), std::string::npos);
}

TEST(Intersections, TruncationDropsHigherTerms) {
  const IntersectionTable table = extract_intersections(universal_free_energy(4));
  EXPECT_TRUE(table.find({{1, 0, 1}}) != nullptr);
  EXPECT_TRUE(table.find({{0, 1, 2}}) != nullptr);
  EXPECT_TRUE(table.find({{2, 1, 1}}) == nullptr);
  EXPECT_EQ(table.entries.size(), 2u);
}

}  // namespace
}  // namespace skewtop
