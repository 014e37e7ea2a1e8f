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

#ifndef SKEWTOP_DUALITY_HPP
#define SKEWTOP_DUALITY_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "skewtop/monte_carlo.hpp"
#include "skewtop/rational.hpp"
#include "skewtop/skew_matrix.hpp"

namespace skewtop {

/// <prod_{alpha<=k} det(lambda_alpha - X)>_A over 2N x 2N matrices against
/// <prod_{n<=N} det(a_n - Y)>_Lambda over 2k x 2k matrices, both at gamma = 1/2.
struct DualityInstance {
  SourceSpec a;    // length N
  SourceSpec lam;  // length k

  std::size_t N() const { return a.size(); }
  std::size_t k() const { return lam.size(); }
};

enum class Verdict { pass, fail, inconclusive };
std::string to_string(Verdict v);

enum class DualityMode { exact, mc };

/// Sign convention of the single-integral form for k = 1.
///   calibrated: E_y[prod_n (a_n^2 + (y + lambda)^2)], y ~ N(0, 1/2)
///   literal:    E_y[prod_n ((lambda + i y)^2 - a_n^2)], y ~ N(0, 1/2),
///               which gives lambda^2 - 1/2 for N = 1 and disagrees with the
///               direct expectation lambda^2 + a^2 + 1/2.
enum class K1Convention { calibrated, literal };

Rational lhs_exact(const DualityInstance& inst);
Rational rhs_exact(const DualityInstance& inst);
Rational k1_quadrature(const SourceSpec& a, const Rational& lam,
                       K1Convention convention = K1Convention::calibrated);

struct DualityTrial {
  DualityInstance instance;
  Rational lhs;
  Rational rhs;
  bool equal = false;
};

struct DualityReport {
  std::size_t N = 0;
  std::size_t k = 0;
  DualityMode mode = DualityMode::exact;
  Verdict verdict = Verdict::fail;
  std::vector<DualityTrial> trials;  // exact mode
  std::optional<DualityInstance> mc_instance;
  McEstimate lhs_mc;
  McEstimate rhs_mc;
  double discrepancy = 0.0;  // |lhs - rhs| (mc) or number of unequal trials (exact)
  double combined_stderr = 0.0;
  std::vector<std::string> conventions;
};

struct DualityOptions {
  std::size_t trials = 20;
  std::uint64_t seed = 42;
  std::uint64_t samples = 1000000;
  unsigned workers = 1;
};

/// A rational p/q with p, q drawn uniformly from [-5, 5] \ {0}.
Rational random_small_rational(std::mt19937_64& rng);
DualityInstance random_instance(std::size_t N, std::size_t k, std::mt19937_64& rng);

/// Floating value of prod_alpha det(lambda_alpha - X).
double char_poly_product(const Eigen::MatrixXd& x, const std::vector<double>& lambdas);

DualityReport verify_duality(std::size_t N, std::size_t k, DualityMode mode,
                             const DualityOptions& opts = {});

}  // namespace skewtop

#endif  // SKEWTOP_DUALITY_HPP
