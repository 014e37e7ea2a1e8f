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

#ifndef SKEWTOP_HARISH_CHANDRA_HPP
#define SKEWTOP_HARISH_CHANDRA_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "skewtop/duality.hpp"
#include "skewtop/monte_carlo.hpp"

namespace skewtop {

/// Block eigenvalues of two canonical antisymmetric 2N x 2N matrices.
struct HCInput {
  std::vector<double> y;
  std::vector<double> lam;

  std::size_t N() const { return y.size(); }
};

/// Rejects size mismatches and coinciding squares.
void validate(const HCInput& inp);

/// sum over sigma in S_N and sign patterns with an even number of flips of
/// sgn(sigma) exp(2 sum_j eps_j y_sigma(j) lam_j). Guard N <= 6.
double hc_weyl_sum(const HCInput& inp);

/// 2^{N-1} (det[cosh 2 y_i lam_j] + det[sinh 2 y_i lam_j]).
double hc_determinant_form(const HCInput& inp);

/// prod_{i<j} (y_i^2 - y_j^2)(lam_i^2 - lam_j^2).
double hc_vandermonde(const HCInput& inp);

/// Weyl sum over the Vandermonde product; the group integral divided by
/// this is a constant independent of (y, lam).
double hc_formula(const HCInput& inp);

/// Pairing of the exponent in the group integral.
///   literal:    exp(+tr(g Y g^T Lam)); for SO(2) this is exp(-2 y lam)
///   calibrated: exp(-tr(g Y g^T Lam)); for SO(2) this is exp(+2 y lam),
///               matching the Weyl-sum numerator.
enum class HCPairing { literal, calibrated };
std::string to_string(HCPairing p);

double hc_integrand(const Eigen::MatrixXd& g, const Eigen::MatrixXd& y, const Eigen::MatrixXd& lam,
                    HCPairing pairing);

/// Haar-distributed element of SO(dim): QR of a Gaussian matrix, columns
/// sign-fixed by the diagonal of R, first column flipped when det = -1.
Eigen::MatrixXd haar_sample(std::size_t dim, std::mt19937_64& rng);

/// Exact SO(2) integral (the integrand is constant on the abelian group).
double so2_integral(double y, double lam, HCPairing pairing);

struct HCPairResult {
  HCInput input;
  McEstimate integral;
  double formula = 0.0;
  double ratio = 0.0;
  double ratio_stderr = 0.0;
};

struct HCReport {
  std::size_t N = 0;
  std::uint64_t samples = 0;
  HCPairing pairing = HCPairing::calibrated;
  std::vector<HCPairResult> pairs;
  double ratio_mean = 0.0;
  double max_relative_spread = 0.0;  // max_i |r_i - mean| / |mean|
  double max_pull = 0.0;             // max_{i<j} |r_i - r_j| / sqrt(se_i^2 + se_j^2)
  Verdict verdict = Verdict::fail;
  std::vector<std::string> conventions;
};

struct HCOptions {
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 42;
  std::size_t pairs = 5;
  unsigned workers = 1;
  HCPairing pairing = HCPairing::calibrated;
};

/// Random (y, lam) with entries in [0.1, 0.9] and squares separated by at
/// least 0.05.
HCInput random_hc_input(std::size_t N, std::mt19937_64& rng);

/// Monte Carlo ratio-constancy check. The same Haar draws are reused for all
/// pairs. Guard N <= 3.
HCReport verify_hc(std::size_t N, const HCOptions& opts = {});

}  // namespace skewtop

#endif  // SKEWTOP_HARISH_CHANDRA_HPP
