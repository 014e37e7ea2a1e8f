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

#include <boost/math/special_functions/airy.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>

#include "skewtop/airy.hpp"
#include "skewtop/intersections.hpp"
#include "skewtop/series_engine.hpp"

namespace skewtop {
namespace {

using Big = boost::multiprecision::cpp_bin_float_50;

Big to_big(const Rational& q) { return Big(q.get_num().get_str()) / Big(q.get_den().get_str()); }

TEST(Airy, StreamsSatisfyAiryEquation) {
  // Ai'' = x Ai gives (k+2)(k+1) c_{k+2} = c_{k-1} within each branch.
  const AirySeries a = airy_series(30);
  for (int k = 1; k + 2 <= 30; ++k) {
    EXPECT_EQ(Rational((k + 2) * (k + 1)) * a.ai_term(k + 2).coefficient, a.ai_term(k - 1).coefficient) << k;
  }
  EXPECT_EQ(a.ai_term(2).coefficient, Rational(0));
  EXPECT_EQ(a.ai_term(0).branch, AiryBranch::ai0);
  EXPECT_EQ(a.ai_term(4).branch, AiryBranch::ai1);
}

TEST(Airy, IntegralStreamDifferentiatesToAi) {
  const AirySeries a = airy_series(20);
  for (int k = 0; k < 20; ++k) {
    EXPECT_EQ(Rational(k + 1) * a.integral_term(k + 1).coefficient, a.ai_term(k).coefficient);
    EXPECT_EQ(a.integral_term(k + 1).branch, a.ai_term(k).branch);
  }
  EXPECT_EQ(a.integral_term(0).coefficient, Rational(0));
}

TEST(Airy, SeriesReproducesNumericAiry) {
  const double ai0 = boost::math::airy_ai(0.0);
  const double ai1 = boost::math::airy_ai_prime(0.0);
  const AirySeries a = airy_series(40);
  for (double x : {-1.5, -0.5, 0.3, 1.0}) {
    double sum = 0.0;
    for (const auto& t : a.ai) sum += to_double(t.coefficient) * (t.branch == AiryBranch::ai0 ? ai0 : ai1) * std::pow(x, t.power);
    EXPECT_NEAR(sum, boost::math::airy_ai(x), 1e-13) << x;
  }
}

TEST(Airy, CriticalExpansionLeadingTerms) {
  const auto terms = critical_u_series(3);
  ASSERT_FALSE(terms.empty());
  const CriticalTerm& first = terms.front();
  EXPECT_FALSE(first.from_integral);
  EXPECT_EQ(first.coefficient, Rational(1));
  EXPECT_EQ(first.pows, make_rational(-4, 3));
  EXPECT_EQ(first.powN, make_rational(-4, 3));
  EXPECT_EQ(first.pow3, make_rational(-1, 3));
  for (std::size_t i = 1; i < terms.size(); ++i) EXPECT_LE(terms[i - 1].pows, terms[i].pows);
  bool found = false;
  for (const auto& t : terms) {
    if (t.from_integral && t.x_power == 1) {
      found = true;
      EXPECT_EQ(t.coefficient, make_rational(1, 8));
      EXPECT_EQ(t.pows, make_rational(8, 3));
      EXPECT_EQ(t.powN, make_rational(-1, 3));
    }
  }
  EXPECT_TRUE(found);
}

TEST(Airy, OnePointLabels) {
  EXPECT_EQ(one_point_label(Rational(1)), std::make_pair(1, 0));
  EXPECT_EQ(one_point_label(make_rational(3, 2)), std::make_pair(2, 1));
  EXPECT_EQ(one_point_label(Rational(3)), std::make_pair(6, 1));
  EXPECT_THROW(one_point_label(make_rational(1, 3)), DomainError);
  EXPECT_THROW(one_point_label(make_rational(1, 2)), DomainError);
}

TEST(Airy, GammaRatioAgainstHighPrecisionGamma) {
  for (const auto& [z, z0] : {std::pair{make_rational(4, 3), make_rational(1, 3)},
                              std::pair{make_rational(11, 3), make_rational(2, 3)},
                              std::pair{make_rational(7, 3), make_rational(1, 3)}}) {
    const Big expected = boost::math::tgamma(to_big(z)) / boost::math::tgamma(to_big(z0));
    const Big got = to_big(gamma_ratio(z, z0));
    EXPECT_LT(boost::multiprecision::abs(got - expected) / expected, Big("1e-40"));
  }
  EXPECT_THROW(gamma_ratio(make_rational(1, 3), make_rational(4, 3)), DomainError);
}

TEST(Airy, IntegerGenusValues) {
  const auto g1 = one_point_integer_genus(1);
  EXPECT_EQ(g1.value, make_rational(1, 24));
  EXPECT_EQ(g1.method, "gamma-recurrence");
  const auto g2 = one_point_integer_genus(2);
  EXPECT_EQ(g2.value, Rational(0));
  EXPECT_EQ(g2.method, "gamma-pole");
  const auto g3 = one_point_integer_genus(3);
  EXPECT_EQ(g3.value, make_rational(1, 248832));
  const Big direct = boost::math::tgamma(Big(4) / 3) / (Big(24 * 24 * 24) * 6 * boost::math::tgamma(Big(1) / 3));
  EXPECT_LT(boost::multiprecision::abs(to_big(g3.value) - direct) / direct, Big("1e-40"));
}

TEST(Airy, StreamAgreesWithGammaFormula) {
  for (int g = 1; g <= 12; ++g) EXPECT_EQ(one_point_from_airy_stream(g), one_point_integer_genus(g).value) << g;
}

TEST(Airy, HalfGenusValues) {
  const auto h = one_point_half_genus(make_rational(3, 2));
  EXPECT_EQ(h.value, make_rational(1, 864));
  EXPECT_EQ(h.method, "calibrated");
  EXPECT_EQ(h.branch, OnePointBranch::airy_integral);
  const auto s = one_point_half_genus(make_rational(7, 2));
  EXPECT_EQ(s.value, Rational(0));
  EXPECT_EQ(s.method, "airy-structural");
  const auto e = one_point_half_genus(make_rational(5, 2));
  EXPECT_EQ(e.method, "engine");
  EXPECT_EQ(e.value, make_rational(1, 746496));
  EXPECT_THROW(one_point_half_genus(make_rational(9, 2)), GuardError);
  EXPECT_THROW(one_point_half_genus(Rational(2)), DomainError);
}

TEST(Airy, HalfGenusConsistentWithFreeEnergy) {
  const Rational p8 = universal_free_energy(8).coefficient({8});
  EXPECT_EQ(p8 / Rational(TVariable{2, 1}.pochhammer()), one_point_half_genus(make_rational(3, 2)).value);
  EXPECT_EQ(one_point_from_engine(make_rational(3, 2)), make_rational(1, 864));
}

TEST(Airy, EngineAgreesAtGenusOne) { EXPECT_EQ(one_point_from_engine(Rational(1)), make_rational(1, 24)); }

}  // namespace
}  // namespace skewtop
