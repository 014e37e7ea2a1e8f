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

#include "skewtop/airy.hpp"

#include <algorithm>
#include <tuple>

#include "skewtop/intersections.hpp"
#include "skewtop/series_engine.hpp"

namespace skewtop {

std::string to_string(AiryBranch b) { return b == AiryBranch::ai0 ? "Ai(0)" : "Ai'(0)"; }

std::string to_string(OnePointBranch b) { return b == OnePointBranch::airy ? "airy" : "airy-integral"; }

namespace {

AiryTerm find_term(const std::vector<AiryTerm>& terms, int k) {
  for (const auto& t : terms) {
    if (t.power == k) return t;
  }
  AiryTerm zero;
  zero.power = k;
  zero.coefficient = 0;
  zero.branch = (k % 3 == 1) ? AiryBranch::ai1 : AiryBranch::ai0;
  return zero;
}

}  // namespace

AiryTerm AirySeries::ai_term(int k) const { return find_term(ai, k); }
AiryTerm AirySeries::integral_term(int k) const { return find_term(integral, k); }

AirySeries airy_series(int order) {
  if (order < 0) throw DomainError("negative truncation order");
  AirySeries s;
  s.order = order;
  for (int k = 0; k <= order; ++k) {
    if (k % 3 == 2) continue;
    const int l = k / 3;
    const int shift = (k % 3 == 0) ? 1 : 2;
    BigInt num(1);
    for (int m = 0; m < l; ++m) num *= 3 * m + shift;
    const Rational c = Rational(num) / Rational(factorial(static_cast<unsigned>(k)));
    const AiryBranch br = (k % 3 == 0) ? AiryBranch::ai0 : AiryBranch::ai1;
    s.ai.push_back({k, br, c});
    if (k + 1 <= order) s.integral.push_back({k + 1, br, c / (k + 1)});
  }
  return s;
}

std::vector<CriticalTerm> critical_u_series(int order) {
  const AirySeries a = airy_series(order);
  const Rational third = make_rational(1, 3);
  std::vector<CriticalTerm> out;
  // x^k = (-1/4)^k 3^{-k/3} N^{2k/3} s^{8k/3}
  for (const auto& t : a.ai) {
    CriticalTerm c;
    c.from_integral = false;
    c.x_power = t.power;
    c.branch = t.branch;
    c.coefficient = t.coefficient * pow(make_rational(-1, 4), t.power);
    c.pow3 = -third - third * t.power;
    c.powN = make_rational(-4, 3) + make_rational(2, 3) * t.power;
    c.pows = make_rational(-4, 3) + make_rational(8, 3) * t.power;
    out.push_back(c);
  }
  for (const auto& t : a.integral) {
    CriticalTerm c;
    c.from_integral = true;
    c.x_power = t.power;
    c.branch = t.branch;
    c.coefficient = make_rational(-1, 2) * t.coefficient * pow(make_rational(-1, 4), t.power);
    c.pow3 = -third * t.power;
    c.powN = Rational(-1) + make_rational(2, 3) * t.power;
    c.pows = make_rational(8, 3) * t.power;
    out.push_back(c);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const CriticalTerm& x, const CriticalTerm& y) { return x.pows < y.pows; });
  return out;
}

std::pair<int, int> one_point_label(const Rational& genus) {
  const Rational r = 8 * genus - 5;
  if (r.get_den() != 1) throw DomainError("genus must lie in (1/2)Z");
  const long v = r.get_num().get_si();
  if (v < 0) throw DomainError("no one-point number at genus " + to_string(genus));
  const int j = static_cast<int>(v % 3);
  return {static_cast<int>((v - j) / 3), j};
}

Rational gamma_ratio(const Rational& z, const Rational& z0) {
  const Rational d = z - z0;
  if (d.get_den() != 1 || d < 0) throw DomainError("gamma_ratio needs z - z0 in {0, 1, 2, ...}");
  Rational r(1);
  for (long t = 0; t < d.get_num().get_si(); ++t) r *= z0 + t;
  return r;
}

OnePointResult one_point_integer_genus(int g) {
  if (g <= 0) throw DomainError("genus must be positive");
  OnePointResult res;
  res.genus = g;
  std::tie(res.n, res.j) = one_point_label(Rational(g));
  res.branch = OnePointBranch::airy;
  if (res.j == 2) {
    res.value = 0;
    res.method = "gamma-pole";
    res.note = "1/Gamma((2-j)/3) vanishes at j = 2";
    return res;
  }
  const Rational z = make_rational(g + 1, 3);
  const Rational z0 = make_rational(2 - res.j, 3);
  res.value = gamma_ratio(z, z0) /
              (pow(Rational(24), g) * Rational(factorial(static_cast<unsigned>(g))));
  res.method = "gamma-recurrence";
  return res;
}

Rational one_point_from_airy_stream(int g) {
  if (g <= 0) throw DomainError("genus must be positive");
  const AirySeries a = airy_series(g);
  return a.ai_term(g).coefficient / (pow(Rational(24), g) * pow(Rational(3), g / 3));
}

Rational one_point_from_engine(const Rational& genus) {
  const auto [n, j] = one_point_label(genus);
  const TVariable t{n, j};
  const int m = t.power();
  if (m > 24) throw GuardError("one-point number needs free-energy order " + std::to_string(m) + " > 24");
  const PowerSumSeries f = universal_free_energy(m);
  const Rational coeff = f.coefficient({m});
  Rational norm = Rational(t.pochhammer());
  if (genus.get_den() == 1) {
    const Rational e = t.three_exponent();
    if (e.get_den() != 1) throw DomainError("irrational integer-genus normalization");
    norm *= pow(Rational(3), static_cast<int>(e.get_num().get_si()));
  }
  return coeff / norm;
}

Rational half_genus_calibration() {
  return make_rational(1, 864) / airy_series(1).integral_term(1).coefficient;
}

OnePointResult one_point_half_genus(const Rational& genus) {
  const Rational k_rat = genus - make_rational(1, 2);
  if (k_rat.get_den() != 1 || k_rat < 1) {
    throw DomainError("half-integer genus must be one of 3/2, 5/2, ...");
  }
  const int k = static_cast<int>(k_rat.get_num().get_si());
  OnePointResult res;
  res.genus = genus;
  std::tie(res.n, res.j) = one_point_label(genus);
  res.branch = OnePointBranch::airy_integral;
  const AirySeries a = airy_series(k);
  const AiryTerm term = a.integral_term(k);
  if (term.coefficient == 0) {
    res.value = 0;
    res.method = "airy-structural";
    res.note = "int_0^x Ai has no x^" + std::to_string(k) + " term";
    return res;
  }
  if (k == 1) {
    res.value = half_genus_calibration() * term.coefficient;
    res.method = "calibrated";
    return res;
  }
  res.value = one_point_from_engine(genus);
  res.method = "engine";
  res.note = "stream constant of the " + to_string(term.branch) + " branch is not fixed by calibration";
  return res;
}

}  // namespace skewtop
