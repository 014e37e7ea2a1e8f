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

#ifndef SKEWTOP_SKEW_MATRIX_HPP
#define SKEWTOP_SKEW_MATRIX_HPP

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "skewtop/rational.hpp"

namespace skewtop {

/// Real antisymmetric matrix stored densely. Writes go through set(), which
/// keeps the (i, j) and (j, i) entries consistent, so the invariant
/// m(i, j) == -m(j, i) holds by construction.
template <class T>
class SkewMatrix {
 public:
  SkewMatrix() = default;
  explicit SkewMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, T(0)) {}

  std::size_t dim() const { return dim_; }

  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  void set(std::size_t i, std::size_t j, const T& value) {
    if (i == j) {
      if (value != T(0)) throw DomainError("antisymmetric matrix with nonzero diagonal");
      return;
    }
    data_[i * dim_ + j] = value;
    data_[j * dim_ + i] = -value;
  }

  bool is_zero() const {
    for (const T& v : data_) {
      if (v != T(0)) return false;
    }
    return true;
  }

  const std::vector<T>& data() const { return data_; }

 private:
  std::size_t dim_ = 0;
  std::vector<T> data_;
};

/// Spectral data (a_1..a_N) of a canonical antisymmetric matrix.
struct SourceSpec {
  std::vector<Rational> values;

  std::size_t size() const { return values.size(); }
  bool empty() const { return values.empty(); }
  bool all_zero() const;
  std::vector<double> to_doubles() const;
};

/// Block-diagonal a_1 v + ... + a_N v with v = [[0, 1], [-1, 0]].
SkewMatrix<Rational> build_canonical(const SourceSpec& spec);
SkewMatrix<double> build_canonical_double(const std::vector<double>& values);

SkewMatrix<double> to_double(const SkewMatrix<Rational>& m);
Eigen::MatrixXd to_eigen(const SkewMatrix<double>& m);

/// Exact Pfaffian by skew elimination over the rationals. Pf(a v) = a.
Rational pfaffian(const SkewMatrix<Rational>& m);

/// Floating Pfaffian by Householder-free skew tridiagonalization with
/// partial pivoting (Parlett-Reid).
double pfaffian(const SkewMatrix<double>& m);

/// Exact determinant of a dense row-major n x n matrix by fraction-exact
/// Gaussian elimination.
Rational determinant(std::vector<Rational> m, std::size_t n);

Rational determinant(const SkewMatrix<Rational>& m);
double determinant(const SkewMatrix<double>& m);

}  // namespace skewtop

#endif  // SKEWTOP_SKEW_MATRIX_HPP
