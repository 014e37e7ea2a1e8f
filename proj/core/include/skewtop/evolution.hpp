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

#ifndef SKEWTOP_EVOLUTION_HPP
#define SKEWTOP_EVOLUTION_HPP

#include <map>
#include <random>
#include <vector>

#include "skewtop/multi_series.hpp"
#include "skewtop/rational.hpp"
#include "skewtop/skew_matrix.hpp"

namespace skewtop {

/// Series in s (one variable) or s_1..s_n with exact coefficients.
using SSeries = MultiSeries;

/// Laurent series in a contour variable v whose coefficients are series in
/// the s variables. Powers of v are unbounded above; the caller controls
/// growth through the s truncation of the coefficients.
class LaurentSeries {
 public:
  LaurentSeries(std::size_t s_vars, int s_order) : s_vars_(s_vars), s_order_(s_order) {}

  void add(int v_power, const SSeries& coeff);
  /// Coefficient of v^{v_power} (zero series when absent).
  SSeries coefficient(int v_power) const;
  /// Coefficient of v^{-1}.
  SSeries residue() const { return coefficient(-1); }
  const std::map<int, SSeries>& terms() const { return terms_; }

  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

 private:
  std::size_t s_vars_;
  int s_order_;
  std::map<int, SSeries> terms_;
};

/// U(s) = (1/2N) <tr exp(sX)> over 2N x 2N matrices at gamma = 1/2 with
/// canonical source a, as an exact series through s^order.
///
/// The sources must be all zero, all equal in magnitude (one pole of order
/// N at each of +a and -a) or pairwise distinct in magnitude (simple
/// poles). Anything in between is rejected. Guard order <= 20.
SSeries u1_series(const SourceSpec& a, int order);

/// lim_{N -> 0} U(s) from the closed form
///   (4/s^2) sinh(s^2/4) + int_0^{s^2/4} sinh(x)/x dx.
/// Guard order <= 30.
SSeries u_replica_series(int order);

/// The same limit from the contour form at zero source: the N-th power of
/// the integrand is written as exp(N log), the coefficient of N^1 is taken,
/// and the contour integral is evaluated as the coefficient of 1/v at
/// large v.
SSeries u_replica_series_formal(int order);

/// sum over eps in {+1,-1}^n of W(eps_1 s_1, ..., eps_n s_n) with
///   W = (1/(2 sigma^2)) prod 4 sinh(s_i sigma / 4)
///     + (1/2) int_0^sigma dy/y prod sinh(s_i y / 4),   sigma = sum s_i.
/// Guard order <= 16.
SSeries theorem3_series(int n, int order);

/// Replica limit of the two-point contour integral, each contour taken as
/// the coefficient of 1/u at large |u| (u_2 first, then u_1). Guard
/// order <= 12.
SSeries u2_contour_series(int order);

/// Series of the closed two-point form
///   (2/sigma^2) sh(s_1 sigma/4) sh(s_2 sigma/4) - (same with delta)
///   + (1/2) int_delta^sigma dy/y sh(s_1 y/4) sh(s_2 y/4)
/// with sigma = s_1 + s_2 and delta = s_1 - s_2.
SSeries u2_closed_form_series(int order);

/// Checks det[1/(x_i^2 - y_j^2)] against
/// (-1)^{n(n-1)/2} prod_{i<j}(x_i^2 - x_j^2)(y_i^2 - y_j^2) / prod_{i,j}(x_i^2 - y_j^2)
/// in exact arithmetic. Degenerate inputs are rejected.
bool cauchy_identity_check(const std::vector<Rational>& x, const std::vector<Rational>& y);

/// Random rational points for the Cauchy identity with all squares distinct.
std::pair<std::vector<Rational>, std::vector<Rational>> random_cauchy_points(std::size_t n,
                                                                             std::mt19937_64& rng);

}  // namespace skewtop

#endif  // SKEWTOP_EVOLUTION_HPP
