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

#include <cmath>
#include <random>

#include "skewtop/duality.hpp"
#include "skewtop/oracle/oracle.hpp"

namespace skewtop {
namespace {

const Rational kHalf = make_rational(1, 2);

TEST(Duality, RandomRationalsAreNonzeroAndSmall) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const Rational q = random_small_rational(rng);
    EXPECT_NE(q, 0);
    EXPECT_LE(abs(q.get_num()), 5);
    EXPECT_LE(q.get_den(), 5);
  }
}

TEST(Duality, LhsMatchesDirectDeterminantOracle) {
  std::mt19937_64 rng(2);
  for (std::size_t N = 1; N <= 2; ++N) {
    for (std::size_t k = 1; k <= 2; ++k) {
      const DualityInstance inst = random_instance(N, k, rng);
      const auto o = oracle::direct_det_expect(2 * N, inst.a, inst.lam.values);
      EXPECT_EQ(lhs_exact(inst), *o.exact);
      const auto r = oracle::direct_det_expect(2 * k, inst.lam, inst.a.values);
      EXPECT_EQ(rhs_exact(inst), *r.exact);
    }
  }
}

TEST(Duality, SingleSpectralParameterByHand) {
  const Rational a = make_rational(3, 2), lam = make_rational(-2, 5);
  const DualityInstance inst{SourceSpec{{a}}, SourceSpec{{lam}}};
  EXPECT_EQ(lhs_exact(inst), lam * lam + a * a + kHalf);
  EXPECT_EQ(rhs_exact(inst), lam * lam + a * a + kHalf);
}

TEST(Duality, CalibratedSingleIntegralMatchesDirectExpectation) {
  std::mt19937_64 rng(3);
  for (std::size_t N = 1; N <= 3; ++N) {
    for (int t = 0; t < 5; ++t) {
      const DualityInstance inst = random_instance(N, 1, rng);
      EXPECT_EQ(k1_quadrature(inst.a, inst.lam.values[0]), lhs_exact(inst));
    }
  }
}

TEST(Duality, LiteralSingleIntegralDisagrees) {
  const Rational a(1), lam(2);
  EXPECT_EQ(k1_quadrature(SourceSpec{{a}}, lam, K1Convention::literal), lam * lam - a * a - kHalf);
  EXPECT_NE(k1_quadrature(SourceSpec{{a}}, lam, K1Convention::literal), lam * lam + a * a + kHalf);
}

TEST(Duality, ExactSmallSizes) {
  DualityOptions opts;
  opts.trials = 20;
  for (std::size_t N = 1; N <= 2; ++N) {
    for (std::size_t k = 1; k <= 2; ++k) {
      const DualityReport rep = verify_duality(N, k, DualityMode::exact, opts);
      EXPECT_EQ(rep.verdict, Verdict::pass) << "N = " << N << ", k = " << k;
      EXPECT_EQ(rep.trials.size(), 20u);
    }
  }
}

TEST(Duality, CharPolyProductOfCanonicalMatrix) {
  const std::vector<double> a = {0.5, -1.25};
  const Eigen::MatrixXd x = to_eigen(build_canonical_double(a));
  const double lam = 0.75;
  EXPECT_NEAR(char_poly_product(x, {lam}), (lam * lam + 0.25) * (lam * lam + 1.5625), 1e-12);
}

TEST(Duality, MonteCarloSmallCaseAndDeterminism) {
  DualityOptions opts;
  opts.samples = 200000;
  opts.seed = 17;
  opts.workers = 2;
  const DualityReport a = verify_duality(2, 1, DualityMode::mc, opts);
  EXPECT_NE(a.verdict, Verdict::fail);
  const DualityReport b = verify_duality(2, 1, DualityMode::mc, opts);
  EXPECT_EQ(a.lhs_mc.mean, b.lhs_mc.mean);
  EXPECT_EQ(a.rhs_mc.stderr_, b.rhs_mc.stderr_);
}

TEST(Duality, InputValidation) {
  EXPECT_THROW(verify_duality(0, 1, DualityMode::exact), DomainError);
  EXPECT_THROW(verify_duality(3, 1, DualityMode::exact), GuardError);
  EXPECT_THROW(lhs_exact(DualityInstance{}), DomainError);
}

}  // namespace
}  // namespace skewtop
