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

#include "skewtop/ensemble.hpp"
#include "skewtop/evolution.hpp"
#include "skewtop/oracle/oracle.hpp"

namespace skewtop {
namespace {

const Rational kHalf = make_rational(1, 2);

// Taylor coefficients of exp(c s^2) through s^order.
MultiSeries gaussian_series(const Rational& c, int order) {
  MultiSeries out(1, order);
  for (int i = 0; 2 * i <= order; ++i) out.add_term({2 * i}, pow(c, i) / Rational(factorial(static_cast<unsigned>(i))));
  return out;
}

MultiSeries cos_series(const Rational& a, int order) {
  MultiSeries out(1, order);
  for (int i = 0; 2 * i <= order; ++i) {
    out.add_term({2 * i}, Rational(minus_one_pow(i)) * pow(a, 2 * i) / Rational(factorial(static_cast<unsigned>(2 * i))));
  }
  return out;
}

// Coefficient of s^m in (1/2N) <tr exp(sX)> from exact trace moments.
Rational moment_coefficient(const SourceSpec& a, int m) {
  const GaussianEnsemble ens(a, kHalf);
  return trace_moment(ens, {m}) /
         (Rational(factorial(static_cast<unsigned>(m))) * Rational(2 * static_cast<long>(a.size())));
}

void expect_matches_moments(const SourceSpec& a, int max_power) {
  const SSeries u = u1_series(a, max_power);
  EXPECT_EQ(u.constant_term(), Rational(1));
  for (int m = 1; m <= max_power; ++m) {
    EXPECT_EQ(u.coefficient({m}), moment_coefficient(a, m)) << "s^" << m;
  }
}

TEST(Evolution, SmallestMatrixIsGaussian) {
  EXPECT_EQ(u1_series(SourceSpec{{Rational(0)}}, 10), gaussian_series(make_rational(-1, 4), 10));
}

TEST(Evolution, SmallestMatrixWithSource) {
  for (const Rational& a : {make_rational(1, 2), Rational(-3), make_rational(2, 7)}) {
    EXPECT_EQ(u1_series(SourceSpec{{a}}, 10), cos_series(a, 10) * gaussian_series(make_rational(-1, 4), 10));
  }
}

TEST(Evolution, ZeroSourceMatchesTraceMoments) {
  expect_matches_moments(SourceSpec{{Rational(0), Rational(0)}}, 6);
  expect_matches_moments(SourceSpec{{Rational(0), Rational(0), Rational(0)}}, 4);
}

TEST(Evolution, DistinctSourcesMatchTraceMoments) {
  expect_matches_moments(SourceSpec{{Rational(1), Rational(2)}}, 6);
  expect_matches_moments(SourceSpec{{make_rational(1, 3), make_rational(-5, 2)}}, 6);
  expect_matches_moments(SourceSpec{{Rational(1), Rational(2), Rational(3)}}, 4);
}

TEST(Evolution, EqualSourcesMatchTraceMoments) {
  expect_matches_moments(SourceSpec{{Rational(1), Rational(1)}}, 6);
  expect_matches_moments(SourceSpec{{make_rational(3, 2), make_rational(-3, 2)}}, 6);
  expect_matches_moments(SourceSpec{{Rational(2), Rational(2), Rational(2)}}, 4);
}

TEST(Evolution, FiniteSeriesAreEven) {
  for (const SourceSpec& a : {SourceSpec{{Rational(0), Rational(0)}}, SourceSpec{{Rational(1), Rational(3)}},
                              SourceSpec{{Rational(2), Rational(2)}}}) {
    EXPECT_TRUE(u1_series(a, 12).is_even_in_each_variable());
  }
}

TEST(Evolution, UnsupportedSourcePatterns) {
  EXPECT_THROW(u1_series(SourceSpec{{Rational(0), Rational(1)}}, 4), DomainError);
  EXPECT_THROW(u1_series(SourceSpec{{Rational(1), Rational(1), Rational(2)}}, 4), DomainError);
  EXPECT_THROW(u1_series(SourceSpec{}, 4), DomainError);
  EXPECT_THROW(u1_series(SourceSpec{{Rational(1)}}, 22), GuardError);
}

TEST(Evolution, ReplicaLimitLowOrders) {
  MultiSeries expected(1, 6);
  expected.add_term({0}, Rational(1));
  expected.add_term({2}, make_rational(1, 4));
  expected.add_term({4}, make_rational(1, 96));
  expected.add_term({6}, make_rational(1, 1152));
  EXPECT_EQ(u_replica_series(6), expected);
}

TEST(Evolution, ReplicaContourPathAgrees) {
  EXPECT_EQ(u_replica_series_formal(14), u_replica_series(14));
}

TEST(Evolution, ReplicaMatchesRibbonOracle) {
  EXPECT_EQ(oracle::replica_correlator_series(1, 10), u_replica_series(10));
}

TEST(Evolution, OnePointSumMatchesReplica) { EXPECT_EQ(theorem3_series(1, 16), u_replica_series(16)); }

TEST(Evolution, MultiPointSumsAreEvenAndSymmetric) {
  for (int n = 2; n <= 3; ++n) {
    const SSeries w = theorem3_series(n, 10);
    EXPECT_TRUE(w.is_even_in_each_variable());
    EXPECT_TRUE(w.is_symmetric());
  }
}

TEST(Evolution, TwoPointContourMatchesClosedForm) {
  const SSeries c = u2_contour_series(12);
  EXPECT_EQ(c, u2_closed_form_series(12));
  EXPECT_TRUE(c.is_even_in_each_variable());
  EXPECT_TRUE(c.is_symmetric());
}

TEST(Evolution, TwoPointClosedFormAgainstRibbonOracle) {
  EXPECT_EQ(oracle::replica_correlator_series(2, 10), u2_closed_form_series(10) * Rational(-4));
}

TEST(Evolution, CauchyIdentity) {
  std::mt19937_64 rng(12);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int t = 0; t < 5; ++t) {
      const auto [x, y] = random_cauchy_points(n, rng);
      EXPECT_TRUE(cauchy_identity_check(x, y));
    }
  }
  EXPECT_THROW(cauchy_identity_check({Rational(1), Rational(-1)}, {Rational(2), Rational(3)}), DomainError);
  EXPECT_THROW(cauchy_identity_check({Rational(2)}, {Rational(2)}), DomainError);
}

TEST(Evolution, LaurentProductAndResidue) {
  LaurentSeries a(1, 4), b(1, 4);
  a.add(-2, MultiSeries::constant(1, 4, Rational(3)));
  b.add(1, MultiSeries::variable(1, 4, 0));
  const LaurentSeries p = a * b;
  EXPECT_EQ(p.residue(), MultiSeries::variable(1, 4, 0) * Rational(3));
  EXPECT_TRUE(p.coefficient(0).is_zero());
}

}  // namespace
}  // namespace skewtop
