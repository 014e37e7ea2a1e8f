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

#ifndef SKEWTOP_SERIES_ENGINE_HPP
#define SKEWTOP_SERIES_ENGINE_HPP

#include <map>
#include <string>
#include <vector>

#include "skewtop/multi_series.hpp"
#include "skewtop/rational.hpp"

namespace skewtop {

/// Weakly decreasing list of positive parts.
using Partition = std::vector<int>;

/// All partitions of n with parts <= max_part and at most max_len parts, in
/// reverse lexicographic order.
std::vector<Partition> partitions(int n, int max_part, int max_len);
std::vector<Partition> partitions(int n);

/// Irreducible character chi^lambda at cycle type rho (Murnaghan-Nakayama).
BigInt character(const Partition& lambda, const Partition& rho);
/// Centralizer order z_rho = prod_m m^{c_m} c_m!.
BigInt z_rho(const Partition& rho);

/// Series in the power sums p_m = sum_i u_i^m. Variable r of `series` is
/// p_{indices[r]} and carries weight indices[r].
struct PowerSumSeries {
  std::vector<int> indices;
  MultiSeries series;

  /// Coefficient of prod p_{m}; `ms` lists the m values with repetition.
  Rational coefficient(const std::vector<int>& ms) const;
  /// Nonzero terms keyed by their weakly decreasing list of m values.
  std::map<std::vector<int>, Rational> terms() const;
  std::string to_string() const;
};

/// Coefficients r = 0..R of f_j(w) = E[(1 - w z)^{2j} exp(2 w z^3 - w^2 z^4 / 2)]
/// for z ~ N(0, 1/6).
std::vector<Rational> one_dim_expectations(int j, int R);

/// Z as a combination of Schur polynomials in w_i = u_i^2 with at most k
/// rows, through w-degree R. Writing the Vandermonde as a determinant makes
/// Z = det[w_i^{k-1-j} f_j(w_i)] / prod_{i<j}(w_i - w_j), so the coefficient
/// of s_lambda is det[c_{j, lambda_l + j - l}].
std::map<Partition, Rational> partition_schur(int k, int R);

/// Z in power sums p_2, p_4, ... (through u-degree `order`).
PowerSumSeries partition_power_sums(int k, int order);

/// Z as a series in u_1..u_k, normalized to constant term 1. Guard order <= 16.
MultiSeries partition_series(int k, int order);

/// prod p_m expanded in k variables.
MultiSeries expand_power_sums(const PowerSumSeries& ps, int k);

/// Rewrites a symmetric series in power sums. Series even in every variable
/// are rewritten in p_2, p_4, ... and need k >= order/2; otherwise k >= order.
PowerSumSeries to_power_sums(const MultiSeries& s);

PowerSumSeries log_power_sums(const PowerSumSeries& z);

/// log Z directly in power sums with enough variables for the result to be
/// the universal (k-independent) one. Guard order <= 24.
PowerSumSeries universal_free_energy(int order);

}  // namespace skewtop

#endif  // SKEWTOP_SERIES_ENGINE_HPP
