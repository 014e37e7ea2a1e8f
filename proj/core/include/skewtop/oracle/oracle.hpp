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

#ifndef SKEWTOP_ORACLE_ORACLE_HPP
#define SKEWTOP_ORACLE_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "skewtop/ensemble.hpp"
#include "skewtop/multi_series.hpp"
#include "skewtop/rational.hpp"
#include "skewtop/skew_matrix.hpp"

/// Reference computations that share no evaluation code with the modules
/// they check. They favor transparency over speed.
namespace skewtop::oracle {

enum class Method { pairing_enumeration, exact_quadrature_1d, direct_determinant, mc };
std::string to_string(Method m);

struct OracleResult {
  Method method = Method::mc;
  std::optional<Rational> exact;
  double estimate = 0.0;
  double stderr_ = 0.0;
  std::uint64_t cost = 0;  // terms enumerated or samples drawn
  bool inconclusive = false;
};

/// E[z^power] for z ~ N(0, variance): (power-1)!! variance^{power/2}, and 0
/// for odd powers.
Rational gaussian_moment_1d(int power, const Rational& variance);

/// <prod_alpha det(lambda_alpha - X)> over d x d antisymmetric X with
/// density exp(gamma tr X^2 + tr XA), A canonical from `source` (empty means
/// zero source). Each determinant is expanded symbolically in the
/// upper-triangle entries, and every monomial is integrated entry by entry
/// as a shifted one-dimensional Gaussian. Guard d <= 4.
OracleResult direct_det_expect(std::size_t d, const SourceSpec& source, const std::vector<Rational>& lambdas,
                               const Rational& gamma = make_rational(1, 2));

/// <prod_r tr X^{powers[r]}> over d x d antisymmetric matrices with density
/// exp(gamma tr X^2), as a polynomial in d (entry t is the coefficient of
/// d^t). Summed over pairings of the matrix entries and both index
/// identifications of every pair; each closed index loop gives a factor d.
/// Guard: total degree <= 12.
std::vector<Rational> ribbon_moment(const std::vector<int>& powers, const Rational& gamma);

/// Series of lim_{d -> 0} (1/d) <prod_i tr exp(s_i X)> at gamma = 1/2,
/// assembled from ribbon_moment. Guard order <= 12.
MultiSeries replica_correlator_series(int n, int order);

/// Normalized k = 2 partition function as a series in (u_1, u_2), computed
/// by expanding the shifted integrand in the fluctuation variables, taking
/// Gaussian moments of variance u_i^2/6, and dividing the antisymmetric
/// Vandermonde expectation by u_2^2 - u_1^2. Guard order <= 12.
MultiSeries direct_partition_k2(int order);

using MatrixObservable = std::function<double(const Eigen::MatrixXd&)>;

/// Single-threaded Monte Carlo reference with 16-block median of means.
/// Entries are drawn independently from their Gaussian marginals.
OracleResult mc_reference(const MatrixObservable& observable, const GaussianEnsemble& ens,
                          std::uint64_t samples, std::uint64_t seed);

}  // namespace skewtop::oracle

#endif  // SKEWTOP_ORACLE_ORACLE_HPP
