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

#ifndef SKEWTOP_MULTI_SERIES_HPP
#define SKEWTOP_MULTI_SERIES_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "skewtop/rational.hpp"

namespace skewtop {

using Exponents = std::vector<int>;

/// Truncated multivariate power series with exact coefficients.
///
/// Variable v carries a positive weight; a monomial's degree is the
/// weighted sum of its exponents and only monomials of degree <= order are
/// stored. Zero coefficients are never stored, and the map keeps iteration
/// deterministic.
class MultiSeries {
 public:
  MultiSeries() = default;
  MultiSeries(std::size_t nvars, int order);
  MultiSeries(std::vector<int> weights, int order);

  static MultiSeries constant(std::size_t nvars, int order, const Rational& c);
  static MultiSeries variable(std::size_t nvars, int order, std::size_t v);

  std::size_t nvars() const { return weights_.size(); }
  int order() const { return order_; }
  const std::vector<int>& weights() const { return weights_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  int degree(const Exponents& e) const;
  Rational coefficient(const Exponents& e) const;
  Rational constant_term() const;
  void add_term(const Exponents& e, const Rational& c);
  void set_term(const Exponents& e, const Rational& c);

  MultiSeries truncated(int order) const;
  /// Homogeneous part of the given degree.
  MultiSeries homogeneous(int degree) const;

  MultiSeries& operator+=(const MultiSeries& o);
  MultiSeries& operator-=(const MultiSeries& o);
  MultiSeries& operator*=(const Rational& c);
  friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
  friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }
  friend MultiSeries operator*(MultiSeries a, const Rational& c) { return a *= c; }
  friend MultiSeries operator*(const Rational& c, MultiSeries a) { return a *= c; }
  friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
  MultiSeries operator-() const;

  bool operator==(const MultiSeries& o) const;
  bool operator!=(const MultiSeries& o) const { return !(*this == o); }

  bool is_zero() const { return terms_.empty(); }
  /// Every exponent of every stored monomial is even.
  bool is_even_in_each_variable() const;
  /// Invariant under all permutations of the variables (equal weights).
  bool is_symmetric() const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void check_compatible(const MultiSeries& o) const;

  std::vector<int> weights_;
  int order_ = 0;
  std::map<Exponents, Rational> terms_;
};

/// log(z) for z with constant term 1.
MultiSeries log_series(const MultiSeries& z);
/// exp(z) for z with constant term 0.
MultiSeries exp_series(const MultiSeries& z);

}  // namespace skewtop

#endif  // SKEWTOP_MULTI_SERIES_HPP
