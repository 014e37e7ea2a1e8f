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

#ifndef SKEWTOP_INTERSECTIONS_HPP
#define SKEWTOP_INTERSECTIONS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skewtop/rational.hpp"
#include "skewtop/series_engine.hpp"

namespace skewtop {

/// Normalization of the generating variables t_{n,j} (p = 3):
///   integer genus:      t = 3^{(j-3-5n)/8} prod_{l<n}(3l+j+1) p_{3n+j+1}
///   half-integer genus: t = prod_{l<n}(3l+j+1) p_{3n+j+1}
/// raw_coefficient marks terms whose normalization is not determined.
enum class Convention { integer_genus, half_integer_genus, raw_coefficient };
std::string to_string(Convention c);

struct TVariable {
  int n = 0;
  int j = 0;

  /// Power-sum index m = 3n + j + 1.
  int power() const { return 3 * n + j + 1; }
  static TVariable from_power(int m);

  /// Exponent of 3 in the integer-genus prefactor, (j - 3 - 5n)/8.
  Rational three_exponent() const;
  /// prod_{l<n}(3l + j + 1).
  BigInt pochhammer() const;
  /// True when the integer-genus prefactor of this single variable is rational.
  bool integer_prefactor_rational() const;
};

struct TauFactor {
  int n = 0;
  int j = 0;
  int d = 1;  // multiplicity
};

struct IntersectionEntry {
  Rational genus;
  std::vector<TauFactor> taus;
  Rational value;
  Convention convention = Convention::raw_coefficient;
  /// Alternative normalized values, keyed by convention name.
  std::map<std::string, Rational> candidates;
  std::string note;
};

struct IntersectionTable {
  int p = 3;
  std::vector<IntersectionEntry> entries;

  const IntersectionEntry* find(const std::vector<TauFactor>& taus) const;
};

/// Genus of a product of tau variables from
/// sum (n_i + j_i/3 - 1) = (8/3)(g - 1).
Rational genus_of(const std::vector<TauFactor>& taus);

/// Maps each monomial prod p_m of log Z to an intersection number: m = 3n+j+1,
/// divide by prod d!, then by the normalization fixed by the genus. A term
/// mixing variables with rational and irrational integer-genus prefactors is
/// reported as raw_coefficient together with every computable candidate.
IntersectionTable extract_intersections(const PowerSumSeries& log_z);

}  // namespace skewtop

#endif  // SKEWTOP_INTERSECTIONS_HPP
