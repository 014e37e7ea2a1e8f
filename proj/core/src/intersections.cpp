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

#include "skewtop/intersections.hpp"

#include <algorithm>
#include <numeric>

namespace skewtop {

std::string to_string(Convention c) {
  switch (c) {
    case Convention::integer_genus:
      return "integer";
    case Convention::half_integer_genus:
      return "half-integer";
    case Convention::raw_coefficient:
      return "raw-coefficient";
  }
  return "raw-coefficient";
}

TVariable TVariable::from_power(int m) {
  if (m < 1) throw DomainError("power-sum index must be positive");
  return TVariable{(m - 1) / 3, (m - 1) % 3};
}

Rational TVariable::three_exponent() const { return make_rational(j - 3 - 5 * n, 8); }

BigInt TVariable::pochhammer() const {
  BigInt r(1);
  for (int l = 0; l < n; ++l) r *= 3 * l + j + 1;
  return r;
}

bool TVariable::integer_prefactor_rational() const { return three_exponent().get_den() == 1; }

const IntersectionEntry* IntersectionTable::find(const std::vector<TauFactor>& taus) const {
  for (const auto& e : entries) {
    if (e.taus.size() != taus.size()) continue;
    bool same = true;
    for (std::size_t i = 0; i < taus.size() && same; ++i) {
      same = e.taus[i].n == taus[i].n && e.taus[i].j == taus[i].j && e.taus[i].d == taus[i].d;
    }
    if (same) return &e;
  }
  return nullptr;
}

Rational genus_of(const std::vector<TauFactor>& taus) {
  Rational s(0);
  for (const auto& t : taus) s += t.d * (Rational(t.n) + make_rational(t.j, 3) - 1);
  return 1 + make_rational(3, 8) * s;
}

namespace {

bool is_half_integer(const Rational& g) { return Rational(2 * g).get_den() == 1; }

// 3^e for integer e.
Rational power_of_three(const Rational& e) {
  if (e.get_den() != 1) throw DomainError("irrational power of three");
  return pow(Rational(3), static_cast<int>(e.get_num().get_si()));
}

}  // namespace

IntersectionTable extract_intersections(const PowerSumSeries& log_z) {
  IntersectionTable table;
  const int order = log_z.series.order();
  auto terms = log_z.terms();

  std::vector<std::pair<std::vector<int>, Rational>> sorted(terms.begin(), terms.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    const int da = std::accumulate(a.first.begin(), a.first.end(), 0);
    const int db = std::accumulate(b.first.begin(), b.first.end(), 0);
    return da < db;
  });

  for (const auto& [ms, coeff] : sorted) {
    if (ms.empty()) continue;
    IntersectionEntry entry;
    bool has_rational = false;
    bool has_irrational = false;
    bool has_spin_two = false;
    Rational three_exp(0);
    BigInt poch(1);
    BigInt dfact(1);
    for (std::size_t a = 0; a < ms.size();) {
      std::size_t b = a;
      while (b < ms.size() && ms[b] == ms[a]) ++b;
      const TVariable t = TVariable::from_power(ms[a]);
      const int d = static_cast<int>(b - a);
      entry.taus.push_back({t.n, t.j, d});
      (t.integer_prefactor_rational() ? has_rational : has_irrational) = true;
      if (t.j == 2) has_spin_two = true;
      three_exp += d * t.three_exponent();
      BigInt pd;
      mpz_pow_ui(pd.get_mpz_t(), t.pochhammer().get_mpz_t(), static_cast<unsigned long>(d));
      poch *= pd;
      dfact *= factorial(static_cast<unsigned>(d));
      a = b;
    }
    std::sort(entry.taus.begin(), entry.taus.end(), [](const TauFactor& x, const TauFactor& y) {
      return x.n != y.n ? x.n < y.n : x.j < y.j;
    });
    if (has_spin_two && order <= 8) throw DomainError("unexpected spin-2 power sum at order <= 8");

    entry.genus = genus_of(entry.taus);
    if (!is_half_integer(entry.genus)) {
      throw DomainError("term with genus " + to_string(entry.genus) + " outside (1/2)Z");
    }

    const Rational scaled = coeff * Rational(dfact);
    const Rational half_value = scaled / Rational(poch);
    entry.candidates["half-integer"] = half_value;
    std::optional<Rational> int_value;
    if (three_exp.get_den() == 1) {
      int_value = scaled / (Rational(poch) * power_of_three(three_exp));
      entry.candidates["integer"] = *int_value;
    }

    const bool integer_genus = entry.genus.get_den() == 1;
    if (has_rational && has_irrational) {
      entry.convention = Convention::raw_coefficient;
      entry.value = coeff;
      entry.note = "mixes variables with rational and irrational integer-genus prefactors";
    } else if (integer_genus && int_value) {
      entry.convention = Convention::integer_genus;
      entry.value = *int_value;
    } else if (!integer_genus) {
      entry.convention = Convention::half_integer_genus;
      entry.value = half_value;
    } else {
      entry.convention = Convention::raw_coefficient;
      entry.value = coeff;
      entry.note = "integer genus with irrational normalization";
    }
    if (has_spin_two) {
      entry.note += entry.note.empty() ? "" : "; ";
      entry.note += "contains a spin-2 variable";
    }
    if (entry.taus.size() == 1 && entry.taus[0].n == 1 && entry.taus[0].j == 0 && entry.taus[0].d == 2) {
      entry.note = "alternate genus label: 0";
    }
    table.entries.push_back(std::move(entry));
  }
  return table;
}

}  // namespace skewtop
