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

#include "skewtop/skew_matrix.hpp"

#include <cmath>
#include <utility>

namespace skewtop {

bool SourceSpec::all_zero() const {
  for (const auto& v : values) {
    if (v != 0) return false;
  }
  return true;
}

std::vector<double> SourceSpec::to_doubles() const {
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.get_d());
  return out;
}

SkewMatrix<Rational> build_canonical(const SourceSpec& spec) {
  SkewMatrix<Rational> m(2 * spec.size());
  for (std::size_t j = 0; j < spec.size(); ++j) m.set(2 * j, 2 * j + 1, spec.values[j]);
  return m;
}

SkewMatrix<double> build_canonical_double(const std::vector<double>& values) {
  SkewMatrix<double> m(2 * values.size());
  for (std::size_t j = 0; j < values.size(); ++j) m.set(2 * j, 2 * j + 1, values[j]);
  return m;
}

SkewMatrix<double> to_double(const SkewMatrix<Rational>& m) {
  SkewMatrix<double> out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = i + 1; j < m.dim(); ++j) out.set(i, j, m(i, j).get_d());
  }
  return out;
}

Eigen::MatrixXd to_eigen(const SkewMatrix<double>& m) {
  Eigen::MatrixXd out(m.dim(), m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

namespace {

void require_even(std::size_t dim) {
  if (dim % 2 != 0) throw DomainError("Pfaffian of an odd-dimensional matrix");
}

}  // namespace

Rational pfaffian(const SkewMatrix<Rational>& m) {
  require_even(m.dim());
  const std::size_t n = m.dim();
  std::vector<Rational> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  }
  auto at = [&](std::size_t i, std::size_t j) -> Rational& { return a[i * n + j]; };
  Rational pf(1);
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    // Bring a nonzero entry of row k into column k+1.
    std::size_t p = k + 1;
    while (p < n && at(k, p) == 0) ++p;
    if (p == n) return Rational(0);
    if (p != k + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k + 1, j), at(p, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(at(i, k + 1), at(i, p));
      pf = -pf;
    }
    const Rational pivot = at(k, k + 1);
    pf *= pivot;
    // Trailing block: A <- A - tau c^T + c tau^T, tau = row k / pivot, c = row k+1.
    for (std::size_t i = k + 2; i < n; ++i) {
      const Rational tau_i = at(k, i) / pivot;
      const Rational c_i = at(k + 1, i);
      for (std::size_t j = i + 1; j < n; ++j) {
        const Rational v = at(i, j) - tau_i * at(k + 1, j) + c_i * at(k, j) / pivot;
        at(i, j) = v;
        at(j, i) = -v;
      }
    }
  }
  return pf;
}

double pfaffian(const SkewMatrix<double>& m) {
  require_even(m.dim());
  const std::size_t n = m.dim();
  Eigen::MatrixXd a = to_eigen(m);
  double pf = 1.0;
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    // Pivot the largest entry of column k below the diagonal into row k+1.
    Eigen::Index piv = 0;
    a.col(static_cast<Eigen::Index>(k)).tail(static_cast<Eigen::Index>(n - k - 1)).cwiseAbs().maxCoeff(&piv);
    const auto kp = static_cast<Eigen::Index>(k + 1) + piv;
    const auto k1 = static_cast<Eigen::Index>(k + 1);
    const auto kk = static_cast<Eigen::Index>(k);
    if (kp != k1) {
      a.row(k1).swap(a.row(kp));
      a.col(k1).swap(a.col(kp));
      pf = -pf;
    }
    const double pivot = a(kk, k1);
    if (pivot == 0.0) return 0.0;
    pf *= pivot;
    if (k + 2 < n) {
      const auto rest = static_cast<Eigen::Index>(n - k - 2);
      Eigen::VectorXd tau = a.row(kk).tail(rest).transpose() / pivot;
      Eigen::VectorXd col = a.col(k1).tail(rest);
      a.bottomRightCorner(rest, rest) += tau * col.transpose() - col * tau.transpose();
    }
  }
  return pf;
}

Rational determinant(std::vector<Rational> m, std::size_t n) {
  if (m.size() != n * n) throw DomainError("determinant: matrix size mismatch");
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p * n + c] == 0) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[p * n + j], m[c * n + j]);
      det = -det;
    }
    const Rational pivot = m[c * n + c];
    det *= pivot;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r * n + c] == 0) continue;
      const Rational f = m[r * n + c] / pivot;
      for (std::size_t j = c; j < n; ++j) m[r * n + j] -= f * m[c * n + j];
    }
  }
  return det;
}

Rational determinant(const SkewMatrix<Rational>& m) { return determinant(m.data(), m.dim()); }

double determinant(const SkewMatrix<double>& m) { return to_eigen(m).determinant(); }

}  // namespace skewtop
