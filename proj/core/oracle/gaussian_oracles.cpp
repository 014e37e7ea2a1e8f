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

#include <map>

#include "skewtop/oracle/oracle.hpp"

namespace skewtop::oracle {

std::string to_string(Method m) {
  switch (m) {
    case Method::pairing_enumeration:
      return "pairing-enumeration";
    case Method::exact_quadrature_1d:
      return "1d-quadrature-exact";
    case Method::direct_determinant:
      return "direct-determinant";
    case Method::mc:
      return "mc";
  }
  return "mc";
}

Rational gaussian_moment_1d(int power, const Rational& variance) {
  if (power < 0) throw DomainError("negative moment order");
  if (power % 2 != 0) return Rational(0);
  Rational r(1);
  for (int t = power - 1; t > 1; t -= 2) r *= t;
  for (int t = 0; t < power / 2; ++t) r *= variance;
  return r;
}

namespace {

// Polynomial in the upper-triangle entries x_e.
using Poly = std::map<std::vector<int>, Rational>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t t = 0; t < e.size(); ++t) e[t] = ea[t] + eb[t];
      out[e] += ca * cb;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

void poly_add(Poly& a, const Poly& b, const Rational& scale) {
  for (const auto& [e, c] : b) {
    a[e] += scale * c;
    if (a[e] == 0) a.erase(e);
  }
}

// Laplace expansion along the first row.
Poly poly_det(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Poly out;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].empty()) continue;
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t cc = 0; cc < n; ++cc) {
        if (cc != c) row.push_back(m[r][cc]);
      }
      minor.push_back(std::move(row));
    }
    poly_add(out, poly_mul(m[0][c], poly_det(minor)), Rational(c % 2 == 0 ? 1 : -1));
  }
  return out;
}

}  // namespace

OracleResult direct_det_expect(std::size_t d, const SourceSpec& source, const std::vector<Rational>& lambdas,
                               const Rational& gamma) {
  if (d == 0 || d > 4) throw GuardError("direct_det_expect supports 1 <= d <= 4");
  if (!source.empty() && 2 * source.size() != d) throw DomainError("source length must be d/2");
  if (gamma <= 0) throw DomainError("gamma must be positive");

  std::vector<std::vector<int>> index(d, std::vector<int>(d, -1));
  int n_entries = 0;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) index[i][j] = n_entries++;
  }
  std::vector<Rational> mean(n_entries, Rational(0));
  for (std::size_t t = 0; t < source.size(); ++t) {
    // A_{2t,2t+1} = a_t; the weight exp(-2 gamma x^2 - 2 a x) centers x at -a/(2 gamma).
    mean[index[2 * t][2 * t + 1]] = -source.values[t] / (2 * gamma);
  }
  const Rational variance = Rational(1) / (4 * gamma);

  const std::vector<int> zero(n_entries, 0);
  Poly product{{zero, Rational(1)}};
  for (const auto& lam : lambdas) {
    std::vector<std::vector<Poly>> m(d, std::vector<Poly>(d));
    for (std::size_t i = 0; i < d; ++i) {
      if (lam != 0) m[i][i][zero] = lam;
      for (std::size_t j = i + 1; j < d; ++j) {
        std::vector<int> e = zero;
        e[index[i][j]] = 1;
        m[i][j][e] = Rational(-1);
        m[j][i][e] = Rational(1);
      }
    }
    product = poly_mul(product, poly_det(m));
  }

  OracleResult res;
  res.method = Method::direct_determinant;
  Rational total(0);
  for (const auto& [e, c] : product) {
    Rational term = c;
    for (int v = 0; v < n_entries && term != 0; ++v) {
      Rational moment(0);
      for (int t = 0; t <= e[v]; ++t) {
        moment += Rational(binomial(static_cast<unsigned>(e[v]), static_cast<unsigned>(t))) *
                  pow(mean[v], e[v] - t) * gaussian_moment_1d(t, variance);
      }
      term *= moment;
    }
    total += term;
    ++res.cost;
  }
  res.exact = total;
  res.estimate = to_double(total);
  return res;
}

}  // namespace skewtop::oracle
