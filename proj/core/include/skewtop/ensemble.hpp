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

#ifndef SKEWTOP_ENSEMBLE_HPP
#define SKEWTOP_ENSEMBLE_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "skewtop/rational.hpp"
#include "skewtop/skew_matrix.hpp"

namespace skewtop {

/// Gaussian measure on d x d real antisymmetric matrices with density
/// proportional to exp(gamma tr X^2 + tr X A).
///
/// Writing tr X^2 = -2 sum_{i<j} X_ij^2 and tr XA = -2 sum_{i<j} X_ij A_ij,
/// the upper-triangle entries are independent with
///   mean     -A_ij / (2 gamma)
///   variance  1 / (4 gamma).
/// The dimension may be odd so that moments in the N x N convention can be
/// evaluated; everything involving a Pfaffian or a canonical source still
/// requires an even dimension.
class GaussianEnsemble {
 public:
  GaussianEnsemble(std::size_t dim, Rational gamma);
  GaussianEnsemble(const SourceSpec& source, Rational gamma);

  std::size_t dim() const { return dim_; }
  const Rational& gamma() const { return gamma_; }
  const SkewMatrix<Rational>& source() const { return source_; }
  bool has_source() const { return !source_.is_zero(); }

  Rational mean(std::size_t i, std::size_t j) const;
  Rational variance() const { return Rational(1) / (4 * gamma_); }

 private:
  std::size_t dim_;
  Rational gamma_;
  SkewMatrix<Rational> source_;
};

/// Draws one matrix. Identical generator state gives an identical matrix.
SkewMatrix<double> sample(const GaussianEnsemble& ens, std::mt19937_64& rng);
SkewMatrix<double> sample(const GaussianEnsemble& ens, std::uint64_t seed);

/// Reusable sampler that caches the floating mean and standard deviation.
class EnsembleSampler {
 public:
  explicit EnsembleSampler(const GaussianEnsemble& ens);
  void draw(std::mt19937_64& rng, Eigen::MatrixXd& out);
  std::size_t dim() const { return dim_; }

 private:
  std::size_t dim_;
  Eigen::MatrixXd mean_;
  double sigma_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

struct EntryIndex {
  std::size_t i;
  std::size_t j;
};
using Monomial = std::vector<EntryIndex>;

/// Exact expectation of a product of entries by summing over all Wick
/// pairings. Each slot either contributes its mean or is contracted with a
/// later slot through <X_ij X_kl>_c = (1/4 gamma)(d_ik d_jl - d_il d_jk).
/// Odd-degree monomials of a centered ensemble give exactly 0.
Rational wick_moment(const GaussianEnsemble& ens, const Monomial& monomial);

/// <prod_r tr X^{powers[r]}> summed over index cycles, pruning cycles that
/// cannot survive the pairing (a centered entry appearing an odd number
/// of times).
Rational trace_moment(const GaussianEnsemble& ens, const std::vector<int>& powers);

/// Exact <prod_alpha det(lambda_alpha I - X)> by Leibniz expansion of each
/// determinant followed by wick_moment on every surviving monomial.
/// Guards: dim <= 8 and at most 2 spectral parameters.
Rational char_poly_avg_exact(const GaussianEnsemble& ens, const SourceSpec& lambdas);

}  // namespace skewtop

#endif  // SKEWTOP_ENSEMBLE_HPP
