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
#include "skewtop/ensemble.hpp"
#include "skewtop/monte_carlo.hpp"
#include "skewtop/oracle/oracle.hpp"
#include "skewtop/rational.hpp"
#include "skewtop/skew_matrix.hpp"

namespace skewtop {
namespace {

const Rational kHalf = make_rational(1, 2);

SkewMatrix<Rational> random_skew(std::size_t d, std::mt19937_64& rng) {
  SkewMatrix<Rational> m(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) m.set(i, j, random_small_rational(rng));
  }
  return m;
}

TEST(Rational, SerializesCanonically) {
  EXPECT_EQ(to_string(make_rational(6, -8)), "-3/4");
  EXPECT_EQ(to_string(make_rational(10, 5)), "2");
  EXPECT_EQ(to_string(Rational(0)), "0");
}

TEST(Rational, ParsesFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("3/4"), make_rational(3, 4));
  EXPECT_EQ(parse_rational("-1.5"), make_rational(-3, 2));
  EXPECT_EQ(parse_rational("0.25"), make_rational(1, 4));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
}

TEST(Rational, ZeroDenominatorRejected) { EXPECT_THROW(make_rational(1, 0), DomainError); }

TEST(Rational, CombinatorialHelpers) {
  EXPECT_EQ(factorial(6), 720);
  EXPECT_EQ(double_factorial(7), 105);
  EXPECT_EQ(double_factorial(-1), 1);
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(pow(make_rational(2, 3), -2), make_rational(9, 4));
}

TEST(SkewMatrix, SetKeepsAntisymmetry) {
  SkewMatrix<Rational> m(3);
  m.set(0, 2, make_rational(5, 7));
  EXPECT_EQ(m(2, 0), make_rational(-5, 7));
  EXPECT_THROW(m.set(1, 1, Rational(1)), DomainError);
  m.set(1, 1, Rational(0));
}

TEST(SkewMatrix, CanonicalPfaffianIsProductOfBlocks) {
  const SourceSpec a{{make_rational(2, 3), Rational(-5), make_rational(1, 4)}};
  EXPECT_EQ(pfaffian(build_canonical(a)), make_rational(2, 3) * -5 * make_rational(1, 4));
  EXPECT_EQ(pfaffian(build_canonical(SourceSpec{{Rational(3)}})), Rational(3));
}

TEST(SkewMatrix, PfaffianSquaredIsDeterminantExact) {
  std::mt19937_64 rng(7);
  for (std::size_t d = 2; d <= 10; d += 2) {
    for (int t = 0; t < 3; ++t) {
      const auto m = random_skew(d, rng);
      const Rational pf = pfaffian(m);
      EXPECT_EQ(pf * pf, determinant(m)) << "d = " << d;
    }
  }
}

Rational pfaffian_by_expansion(const SkewMatrix<Rational>& m, std::vector<std::size_t> rows) {
  if (rows.empty()) return Rational(1);
  Rational total(0);
  for (std::size_t k = 1; k < rows.size(); ++k) {
    std::vector<std::size_t> rest;
    for (std::size_t t = 1; t < rows.size(); ++t) {
      if (t != k) rest.push_back(rows[t]);
    }
    const Rational term = m(rows[0], rows[k]) * pfaffian_by_expansion(m, rest);
    total += (k % 2 == 1) ? term : Rational(-term);
  }
  return total;
}

TEST(SkewMatrix, PfaffianMatchesFirstRowExpansion) {
  std::mt19937_64 rng(5);
  for (std::size_t d = 2; d <= 8; d += 2) {
    for (int t = 0; t < 4; ++t) {
      auto m = random_skew(d, rng);
      if (t % 2 == 1) m.set(0, 1, Rational(0));  // forces a pivot swap
      std::vector<std::size_t> rows(d);
      for (std::size_t i = 0; i < d; ++i) rows[i] = i;
      EXPECT_EQ(pfaffian(m), pfaffian_by_expansion(m, rows)) << "d = " << d;
    }
  }
}

TEST(SkewMatrix, OddDimensionDeterminantVanishes) {
  std::mt19937_64 rng(11);
  for (std::size_t d = 1; d <= 9; d += 2) EXPECT_EQ(determinant(random_skew(d, rng)), 0);
}

TEST(SkewMatrix, FloatingPfaffianMatchesExact) {
  std::mt19937_64 rng(3);
  for (std::size_t d = 2; d <= 10; d += 2) {
    const auto m = random_skew(d, rng);
    const double exact = to_double(pfaffian(m));
    const double pf = pfaffian(to_double(m));
    EXPECT_NEAR(pf, exact, 1e-9 * std::max(1.0, std::fabs(exact)));
    EXPECT_NEAR(pf * pf, determinant(to_double(m)), 1e-8 * std::max(1.0, exact * exact));
  }
}

TEST(SkewMatrix, DeterminantOfDenseMatrix) {
  std::vector<Rational> m = {Rational(2), Rational(1), Rational(0), Rational(1), Rational(3), Rational(1),
                             Rational(0), Rational(1), Rational(4)};
  EXPECT_EQ(determinant(m, 3), Rational(18));
}

TEST(Ensemble, MeanAndVarianceFollowDensity) {
  const SourceSpec a{{make_rational(3, 2), Rational(-2)}};
  const GaussianEnsemble ens(a, Rational(1));
  EXPECT_EQ(ens.variance(), make_rational(1, 4));
  EXPECT_EQ(ens.mean(0, 1), make_rational(-3, 4));
  EXPECT_EQ(ens.mean(2, 3), Rational(1));
  EXPECT_EQ(ens.mean(0, 2), Rational(0));
  EXPECT_EQ(ens.mean(1, 0), make_rational(3, 4));
}

TEST(Ensemble, RejectsNonPositiveGamma) {
  EXPECT_THROW(GaussianEnsemble(4, Rational(0)), DomainError);
  EXPECT_THROW(GaussianEnsemble(4, Rational(-1)), DomainError);
}

TEST(Ensemble, OddDimensionAllowedForMoments) {
  const GaussianEnsemble ens(3, kHalf);
  EXPECT_EQ(trace_moment(ens, {2}), Rational(-3));  // -d(d-1)/(4 gamma)
}

TEST(Ensemble, SamplingIsDeterministicAndAntisymmetric) {
  const GaussianEnsemble ens(SourceSpec{{Rational(1), Rational(2)}}, kHalf);
  const auto x = sample(ens, 99);
  const auto y = sample(ens, 99);
  EXPECT_EQ(x.data(), y.data());
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(x(i, i), 0.0);
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(x(i, j), -x(j, i));
  }
}

TEST(Wick, CovarianceStructure) {
  for (const Rational& gamma : {kHalf, Rational(1)}) {
    const GaussianEnsemble ens(4, gamma);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        for (std::size_t k = 0; k < 4; ++k) {
          for (std::size_t l = 0; l < 4; ++l) {
            const Rational expected =
                Rational(static_cast<int>(i == k && j == l) - static_cast<int>(i == l && j == k)) / (4 * gamma);
            ASSERT_EQ(wick_moment(ens, {{i, j}, {k, l}}), expected);
          }
        }
      }
    }
  }
}

TEST(Wick, OddMonomialsVanishWithoutSource) {
  const GaussianEnsemble ens(4, kHalf);
  EXPECT_EQ(wick_moment(ens, {{0, 1}}), 0);
  EXPECT_EQ(wick_moment(ens, {{0, 1}, {0, 1}, {2, 3}}), 0);
}

TEST(Wick, ShiftedEntryMoments) {
  const Rational a = make_rational(2, 3);
  const GaussianEnsemble ens(SourceSpec{{a}}, kHalf);
  const Rational m = -a;  // -a / (2 gamma)
  EXPECT_EQ(wick_moment(ens, {{0, 1}}), m);
  EXPECT_EQ(wick_moment(ens, {{0, 1}, {0, 1}}), m * m + kHalf);
  EXPECT_EQ(wick_moment(ens, {{0, 1}, {0, 1}, {0, 1}}), m * m * m + 3 * m * kHalf);
}

TEST(Wick, TraceMomentsMatchClosedForms) {
  for (int N = 2; N <= 6; ++N) {
    for (const Rational& gamma : {kHalf, Rational(1)}) {
      const GaussianEnsemble ens(static_cast<std::size_t>(N), gamma);
      const Rational n(N);
      EXPECT_EQ(trace_moment(ens, {2}), -n * (n - 1) / (4 * gamma));
      EXPECT_EQ(trace_moment(ens, {2, 2}), n * (n - 1) * (n * n - n + 4) / (16 * gamma * gamma));
      EXPECT_EQ(trace_moment(ens, {4}), n * (n - 1) * (2 * n - 1) / (16 * gamma * gamma));
    }
  }
}

TEST(Wick, TraceMomentsMatchRibbonOracle) {
  for (const std::vector<int>& powers : std::vector<std::vector<int>>{{6}, {3, 3}, {4, 2}, {2, 2, 2}, {8}, {5, 3}}) {
    const auto poly = oracle::ribbon_moment(powers, kHalf);
    for (std::size_t d = 2; d <= 6; ++d) {
      Rational v(0);
      for (std::size_t t = 0; t < poly.size(); ++t) v += poly[t] * pow(Rational(static_cast<long>(d)), static_cast<int>(t));
      EXPECT_EQ(trace_moment(GaussianEnsemble(d, kHalf), powers), v) << "d = " << d;
    }
  }
}

TEST(CharPoly, SmallCasesByHand) {
  const Rational lam = make_rational(5, 3), a = make_rational(-7, 2);
  EXPECT_EQ(char_poly_avg_exact(GaussianEnsemble(2, kHalf), SourceSpec{{lam}}), lam * lam + kHalf);
  EXPECT_EQ(char_poly_avg_exact(GaussianEnsemble(SourceSpec{{a}}, kHalf), SourceSpec{{lam}}), lam * lam + a * a + kHalf);
}

TEST(CharPoly, AgreesWithDirectDeterminantOracle) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 6; ++t) {
    const SourceSpec a{{random_small_rational(rng), random_small_rational(rng)}};
    SourceSpec lam{{random_small_rational(rng)}};
    if (t % 2 == 0) lam.values.push_back(random_small_rational(rng));
    const auto o = oracle::direct_det_expect(4, a, lam.values);
    ASSERT_TRUE(o.exact.has_value());
    EXPECT_EQ(char_poly_avg_exact(GaussianEnsemble(a, kHalf), lam), *o.exact);
  }
}

TEST(CharPoly, Guards) {
  EXPECT_THROW(char_poly_avg_exact(GaussianEnsemble(10, kHalf), SourceSpec{{Rational(1)}}), GuardError);
  EXPECT_THROW(char_poly_avg_exact(GaussianEnsemble(2, kHalf), SourceSpec{{Rational(1), Rational(2), Rational(3)}}),
               GuardError);
}

TEST(MonteCarlo, MedianOfMeansUsesMad) {
  std::vector<double> blocks(16, 1.0);
  blocks[0] = 100.0;  // a single outlier does not move the median
  const McEstimate e = median_of_means(blocks, 1600);
  EXPECT_DOUBLE_EQ(e.mean, 1.0);
  EXPECT_EQ(e.samples, 1600u);
}

TEST(MonteCarlo, HeavyTailRule) {
  McEstimate e;
  e.mean = 1.0;
  e.stderr_ = 0.6;
  EXPECT_TRUE(e.inconclusive());
  e.stderr_ = 0.1;
  EXPECT_FALSE(e.inconclusive());
}

McConfig small_config(unsigned workers) {
  McConfig cfg;
  cfg.samples = 20000;
  cfg.seed = 5;
  cfg.workers = workers;
  return cfg;
}

SamplerFactory trace_square_factory(const GaussianEnsemble& ens) {
  return [ens]() -> Sampler {
    auto sampler = std::make_shared<EnsembleSampler>(ens);
    auto x = std::make_shared<Eigen::MatrixXd>();
    return [sampler, x](std::mt19937_64& rng, std::vector<double>& out) {
      sampler->draw(rng, *x);
      out[0] = (*x * *x).trace();
    };
  };
}

TEST(MonteCarlo, DeterministicForFixedSeedAndWorkers) {
  const GaussianEnsemble ens(4, Rational(1));
  for (unsigned w : {1u, 2u, 3u}) {
    const auto a = run_blocks(small_config(w), 1, trace_square_factory(ens));
    const auto b = run_blocks(small_config(w), 1, trace_square_factory(ens));
    EXPECT_EQ(a, b) << "workers = " << w;
  }
}

TEST(MonteCarlo, TraceSquareWithinThreeSigma) {
  const GaussianEnsemble ens(4, Rational(1));
  McConfig cfg = small_config(2);
  cfg.samples = 100000;
  const auto est = run_monte_carlo(cfg, 1, trace_square_factory(ens), false);
  EXPECT_LE(std::fabs(est[0].mean + 3.0), 3.0 * est[0].stderr_);
}

}  // namespace
}  // namespace skewtop
