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

#include "skewtop/duality.hpp"

#include <cmath>
#include <memory>

#include "skewtop/ensemble.hpp"

namespace skewtop {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "fail";
}

namespace {

const Rational kHalf(1, 2);

// Polynomial in y with Gaussian-rational coefficients, index = power of y.
struct ComplexPoly {
  std::vector<Rational> re;
  std::vector<Rational> im;
};

ComplexPoly multiply(const ComplexPoly& p, const ComplexPoly& q) {
  ComplexPoly r;
  const std::size_t n = p.re.size() + q.re.size() - 1;
  r.re.assign(n, Rational(0));
  r.im.assign(n, Rational(0));
  for (std::size_t i = 0; i < p.re.size(); ++i) {
    for (std::size_t j = 0; j < q.re.size(); ++j) {
      r.re[i + j] += p.re[i] * q.re[j] - p.im[i] * q.im[j];
      r.im[i + j] += p.re[i] * q.im[j] + p.im[i] * q.re[j];
    }
  }
  return r;
}

// Real part of E[p(y)] for y ~ N(0, 1/2): <y^{2m}> = (2m-1)!! / 2^m.
Rational gaussian_expectation(const ComplexPoly& p) {
  Rational total(0);
  for (std::size_t e = 0; e < p.re.size(); e += 2) {
    const int m = static_cast<int>(e / 2);
    Rational moment(double_factorial(2 * m - 1), BigInt(1));
    moment *= pow(kHalf, m);
    total += p.re[e] * moment;
  }
  return total;
}

void require_exact_size(const DualityInstance& inst) {
  if (inst.a.empty() || inst.lam.empty()) throw DomainError("duality instance needs N >= 1 and k >= 1");
}

}  // namespace

Rational lhs_exact(const DualityInstance& inst) {
  require_exact_size(inst);
  if (2 * inst.N() > 8 || inst.k() > 2) throw GuardError("too large for exact oracle (2N <= 8, k <= 2)");
  GaussianEnsemble ens(inst.a, kHalf);
  return char_poly_avg_exact(ens, inst.lam);
}

Rational rhs_exact(const DualityInstance& inst) {
  require_exact_size(inst);
  if (2 * inst.k() > 8 || inst.N() > 2) throw GuardError("too large for exact oracle (2k <= 8, N <= 2)");
  GaussianEnsemble ens(inst.lam, kHalf);
  return char_poly_avg_exact(ens, inst.a);
}

Rational k1_quadrature(const SourceSpec& a, const Rational& lam, K1Convention convention) {
  ComplexPoly acc{{Rational(1)}, {Rational(0)}};
  for (const auto& an : a.values) {
    ComplexPoly factor;
    if (convention == K1Convention::calibrated) {
      // a^2 + (y + lambda)^2
      factor.re = {an * an + lam * lam, 2 * lam, Rational(1)};
      factor.im = {Rational(0), Rational(0), Rational(0)};
    } else {
      // (lambda + i y)^2 - a^2
      factor.re = {lam * lam - an * an, Rational(0), Rational(-1)};
      factor.im = {Rational(0), 2 * lam, Rational(0)};
    }
    acc = multiply(acc, factor);
  }
  return gaussian_expectation(acc);
}

Rational random_small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(0, 9);
  auto draw = [&] {
    const int v = dist(rng) - 5;  // -5..4
    return v >= 0 ? v + 1 : v;    // skip zero
  };
  const int p = draw();
  const int q = draw();
  return make_rational(p, q);
}

DualityInstance random_instance(std::size_t N, std::size_t k, std::mt19937_64& rng) {
  DualityInstance inst;
  for (std::size_t n = 0; n < N; ++n) inst.a.values.push_back(random_small_rational(rng));
  for (std::size_t a = 0; a < k; ++a) inst.lam.values.push_back(random_small_rational(rng));
  return inst;
}

double char_poly_product(const Eigen::MatrixXd& x, const std::vector<double>& lambdas) {
  double prod = 1.0;
  for (double l : lambdas) {
    Eigen::MatrixXd m = -x;
    m.diagonal().array() += l;
    prod *= m.partialPivLu().determinant();
  }
  return prod;
}

namespace {

McEstimate mc_side(const SourceSpec& source, const SourceSpec& spectral, const DualityOptions& opts,
                   std::uint64_t seed) {
  GaussianEnsemble ens(source, kHalf);
  const std::vector<double> lambdas = spectral.to_doubles();
  McConfig cfg;
  cfg.samples = opts.samples;
  cfg.seed = seed;
  cfg.workers = opts.workers;
  auto est = run_monte_carlo(cfg, 1, [&]() -> Sampler {
    auto sampler = std::make_shared<EnsembleSampler>(ens);
    auto x = std::make_shared<Eigen::MatrixXd>();
    return [sampler, x, lambdas](std::mt19937_64& rng, std::vector<double>& out) {
      sampler->draw(rng, *x);
      out[0] = char_poly_product(*x, lambdas);
    };
  });
  return est[0];
}

}  // namespace

DualityReport verify_duality(std::size_t N, std::size_t k, DualityMode mode, const DualityOptions& opts) {
  if (N == 0 || k == 0) throw DomainError("duality requires N >= 1 and k >= 1");
  DualityReport rep;
  rep.N = N;
  rep.k = k;
  rep.mode = mode;
  rep.conventions = {
      "gamma = 1/2 on both sides",
      "entry mean = -A_ij/(2 gamma), entry variance = 1/(4 gamma)",
      "k = 1 single integral: E_y[prod_n (a_n^2 + (y + lambda)^2)], y ~ N(0, 1/2)",
  };
  std::mt19937_64 rng(opts.seed);

  if (mode == DualityMode::exact) {
    if (N > 2 || k > 2) throw GuardError("exact duality needs N <= 2 and k <= 2");
    std::size_t unequal = 0;
    for (std::size_t t = 0; t < opts.trials; ++t) {
      DualityTrial trial;
      trial.instance = random_instance(N, k, rng);
      trial.lhs = lhs_exact(trial.instance);
      trial.rhs = rhs_exact(trial.instance);
      trial.equal = trial.lhs == trial.rhs;
      if (!trial.equal) ++unequal;
      rep.trials.push_back(std::move(trial));
    }
    rep.discrepancy = static_cast<double>(unequal);
    rep.verdict = unequal == 0 && !rep.trials.empty() ? Verdict::pass : Verdict::fail;
    return rep;
  }

  if (2 * N > 40 || 2 * k > 40) throw GuardError("Monte Carlo duality needs 2N, 2k <= 40");
  DualityInstance inst = random_instance(N, k, rng);
  rep.mc_instance = inst;
  rep.lhs_mc = mc_side(inst.a, inst.lam, opts, opts.seed);
  rep.rhs_mc = mc_side(inst.lam, inst.a, opts, opts.seed + 1);
  rep.discrepancy = std::fabs(rep.lhs_mc.mean - rep.rhs_mc.mean);
  rep.combined_stderr = std::hypot(rep.lhs_mc.stderr_, rep.rhs_mc.stderr_);
  if (rep.lhs_mc.inconclusive() || rep.rhs_mc.inconclusive()) {
    rep.verdict = Verdict::inconclusive;
  } else {
    rep.verdict = rep.discrepancy <= 3.0 * rep.combined_stderr ? Verdict::pass : Verdict::fail;
  }
  return rep;
}

}  // namespace skewtop
