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

#include "skewtop/harish_chandra.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <memory>
#include <numeric>

#include "skewtop/error.hpp"
#include "skewtop/skew_matrix.hpp"

namespace skewtop {

std::string to_string(HCPairing p) {
  return p == HCPairing::calibrated ? "calibrated: exp(-tr(g Y g^T Lam))" : "literal: exp(+tr(g Y g^T Lam))";
}

void validate(const HCInput& inp) {
  const std::size_t n = inp.N();
  if (n == 0 || inp.lam.size() != n) throw DomainError("HC input needs N >= 1 values of y and lambda");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (inp.y[i] * inp.y[i] == inp.y[j] * inp.y[j]) throw DomainError("degenerate y^2 in HC input");
      if (inp.lam[i] * inp.lam[i] == inp.lam[j] * inp.lam[j]) {
        throw DomainError("degenerate lambda^2 in HC input");
      }
    }
  }
}

double hc_weyl_sum(const HCInput& inp) {
  validate(inp);
  const std::size_t n = inp.N();
  if (n > 6) throw GuardError("Weyl sum guard: N <= 6");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double total = 0.0;
  do {
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (perm[i] > perm[j]) sign = -sign;
      }
    }
    for (std::uint32_t flips = 0; flips < (1u << n); ++flips) {
      if (std::popcount(flips) % 2 != 0) continue;
      double expo = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double eps = (flips >> j) & 1u ? -1.0 : 1.0;
        expo += eps * inp.y[perm[j]] * inp.lam[j];
      }
      total += sign * std::exp(2.0 * expo);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

double hc_determinant_form(const HCInput& inp) {
  validate(inp);
  const auto n = static_cast<Eigen::Index>(inp.N());
  Eigen::MatrixXd c(n, n), s(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double x = 2.0 * inp.y[static_cast<std::size_t>(i)] * inp.lam[static_cast<std::size_t>(j)];
      c(i, j) = std::cosh(x);
      s(i, j) = std::sinh(x);
    }
  }
  return std::ldexp(c.determinant() + s.determinant(), static_cast<int>(n) - 1);
}

double hc_vandermonde(const HCInput& inp) {
  double v = 1.0;
  for (std::size_t i = 0; i < inp.N(); ++i) {
    for (std::size_t j = i + 1; j < inp.N(); ++j) {
      v *= (inp.y[i] * inp.y[i] - inp.y[j] * inp.y[j]) * (inp.lam[i] * inp.lam[i] - inp.lam[j] * inp.lam[j]);
    }
  }
  return v;
}

double hc_formula(const HCInput& inp) {
  const double num = inp.N() <= 6 ? hc_weyl_sum(inp) : hc_determinant_form(inp);
  return num / hc_vandermonde(inp);
}

double hc_integrand(const Eigen::MatrixXd& g, const Eigen::MatrixXd& y, const Eigen::MatrixXd& lam,
                    HCPairing pairing) {
  const double tr = (g * y * g.transpose() * lam).trace();
  return std::exp(pairing == HCPairing::calibrated ? -tr : tr);
}

Eigen::MatrixXd haar_sample(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto d = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXd a(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) a(i, j) = normal(rng);
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd& r = qr.matrixQR();
  for (Eigen::Index i = 0; i < d; ++i) {
    if (r(i, i) < 0) q.col(i) = -q.col(i);
  }
  if (q.determinant() < 0) q.col(0) = -q.col(0);
  return q;
}

double so2_integral(double y, double lam, HCPairing pairing) {
  // tr(Y Lam) = -2 y lam for canonical 2 x 2 blocks, and g commutes with both.
  const double tr = -2.0 * y * lam;
  return std::exp(pairing == HCPairing::calibrated ? -tr : tr);
}

HCInput random_hc_input(std::size_t N, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.1, 0.9);
  auto separated = [](const std::vector<double>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = i + 1; j < v.size(); ++j) {
        if (std::fabs(v[i] * v[i] - v[j] * v[j]) < 0.05) return false;
      }
    }
    return true;
  };
  auto draw = [&] {
    std::vector<double> v(N);
    do {
      for (auto& x : v) x = unif(rng);
    } while (!separated(v));
    return v;
  };
  HCInput inp;
  inp.y = draw();
  inp.lam = draw();
  return inp;
}

HCReport verify_hc(std::size_t N, const HCOptions& opts) {
  if (N == 0) throw DomainError("verify_hc needs N >= 1");
  if (N > 3) throw GuardError("Monte Carlo HC guard: N <= 3");
  if (opts.pairs == 0) throw DomainError("verify_hc needs at least one (y, lambda) pair");

  HCReport rep;
  rep.N = N;
  rep.samples = opts.samples;
  rep.pairing = opts.pairing;
  rep.conventions = {"pairing " + to_string(opts.pairing),
                     "ratio = integral / (Weyl sum / prod_{i<j}(y_i^2 - y_j^2)(lam_i^2 - lam_j^2))",
                     "overall constant of the formula not asserted"};

  std::mt19937_64 rng(opts.seed);
  std::vector<HCInput> inputs;
  std::vector<Eigen::MatrixXd> ys, lams;
  for (std::size_t p = 0; p < opts.pairs; ++p) {
    inputs.push_back(random_hc_input(N, rng));
    ys.push_back(to_eigen(build_canonical_double(inputs.back().y)));
    lams.push_back(to_eigen(build_canonical_double(inputs.back().lam)));
  }

  McConfig cfg;
  cfg.samples = opts.samples;
  cfg.seed = opts.seed;
  cfg.workers = opts.workers;
  const std::size_t dim = 2 * N;
  const HCPairing pairing = opts.pairing;
  auto est = run_monte_carlo(
      cfg, inputs.size(),
      [&]() -> Sampler {
        return [&, dim, pairing](std::mt19937_64& g_rng, std::vector<double>& out) {
          const Eigen::MatrixXd g = haar_sample(dim, g_rng);
          for (std::size_t p = 0; p < out.size(); ++p) out[p] = hc_integrand(g, ys[p], lams[p], pairing);
        };
      },
      /*robust=*/false);

  double sum = 0.0;
  for (std::size_t p = 0; p < inputs.size(); ++p) {
    HCPairResult r;
    r.input = inputs[p];
    r.integral = est[p];
    r.formula = hc_formula(inputs[p]);
    r.ratio = r.integral.mean / r.formula;
    r.ratio_stderr = r.integral.stderr_ / std::fabs(r.formula);
    sum += r.ratio;
    rep.pairs.push_back(r);
  }
  rep.ratio_mean = sum / static_cast<double>(rep.pairs.size());
  for (std::size_t i = 0; i < rep.pairs.size(); ++i) {
    rep.max_relative_spread =
        std::max(rep.max_relative_spread, std::fabs(rep.pairs[i].ratio - rep.ratio_mean) / std::fabs(rep.ratio_mean));
    for (std::size_t j = i + 1; j < rep.pairs.size(); ++j) {
      const double se = std::hypot(rep.pairs[i].ratio_stderr, rep.pairs[j].ratio_stderr);
      const double diff = std::fabs(rep.pairs[i].ratio - rep.pairs[j].ratio);
      rep.max_pull = std::max(rep.max_pull, se > 0 ? diff / se : (diff > 1e-12 * std::fabs(rep.ratio_mean) ? 1e300 : 0.0));
    }
  }
  rep.verdict = rep.max_pull <= 3.0 ? Verdict::pass : Verdict::fail;
  return rep;
}

}  // namespace skewtop
