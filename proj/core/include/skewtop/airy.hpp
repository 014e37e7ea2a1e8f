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

#ifndef SKEWTOP_AIRY_HPP
#define SKEWTOP_AIRY_HPP

#include <string>
#include <vector>

#include "skewtop/rational.hpp"

namespace skewtop {

/// Transcendental constant multiplying a coefficient stream of Ai.
enum class AiryBranch { ai0, ai1 };  // Ai(0), Ai'(0)
std::string to_string(AiryBranch b);

struct AiryTerm {
  int power = 0;  // power of x
  AiryBranch branch = AiryBranch::ai0;
  Rational coefficient;  // multiple of Ai(0) or Ai'(0)
};

/// Taylor coefficients of Ai(x) and of int_0^x Ai through x^order:
///   Ai(x) = Ai(0) sum_l prod_{m<l}(3m+1) x^{3l}/(3l)!
///         + Ai'(0) sum_l prod_{m<l}(3m+2) x^{3l+1}/(3l+1)!.
struct AirySeries {
  int order = 0;
  std::vector<AiryTerm> ai;
  std::vector<AiryTerm> integral;

  /// Coefficient of x^k in Ai (zero when absent).
  AiryTerm ai_term(int k) const;
  AiryTerm integral_term(int k) const;
};

AirySeries airy_series(int order);

/// One term of
///   U(s) = 3^{-1/3} (N s)^{-4/3} [Ai(x) - (s^{4/3} (3N)^{1/3} / 2) int_0^x Ai],
///   x = -N^{2/3} s^{8/3} / (4 * 3^{1/3}),
/// written as coefficient * 3^{pow3} * N^{powN} * s^{pows} * (Ai(0) or Ai'(0)).
/// Fractional exponents are kept exactly.
struct CriticalTerm {
  bool from_integral = false;
  int x_power = 0;
  AiryBranch branch = AiryBranch::ai0;
  Rational coefficient;
  Rational pow3;
  Rational powN;
  Rational pows;
};

/// Terms through x^order, sorted by the power of s.
std::vector<CriticalTerm> critical_u_series(int order);

enum class OnePointBranch { airy, airy_integral };
std::string to_string(OnePointBranch b);

struct OnePointResult {
  Rational genus;
  int n = 0;
  int j = 0;
  Rational value;
  OnePointBranch branch = OnePointBranch::airy;
  /// How the value was obtained: "gamma-recurrence", "gamma-pole",
  /// "calibrated", "airy-structural" or "engine".
  std::string method;
  std::string note;
};

/// (n, j) of the single marked point at genus g: 3n + j = 8g - 5, j in {0,1,2}.
std::pair<int, int> one_point_label(const Rational& genus);

/// Gamma(z) / Gamma(z0) for z - z0 a non-negative integer, by the recurrence.
Rational gamma_ratio(const Rational& z, const Rational& z0);

/// <tau_{n,j}>_g = Gamma((g+1)/3) / (24^g g! Gamma((2-j)/3)). For g = 2 mod 3
/// the denominator Gamma(0) is a pole and the value is reported as 0.
OnePointResult one_point_integer_genus(int g);

/// The same numbers read off the Ai stream: the x^g coefficient with the
/// branch constant removed, times 24^{-g} 3^{-floor(g/3)}.
Rational one_point_from_airy_stream(int g);

/// One-point number from the exact free energy of the series engine
/// (coefficient of p_m, m = 8g - 4, divided by its t-normalization).
/// Needs 8g - 4 <= 24.
Rational one_point_from_engine(const Rational& genus);

/// Half-integer genus g = k + 1/2 from the int_0^x Ai stream: x^k has no
/// coefficient when k = 0 mod 3, k = 1 is calibrated on the single constant
/// of the stream, and the remaining reachable genera come from the engine.
OnePointResult one_point_half_genus(const Rational& genus);

/// Calibrated multiplier of the int_0^x Ai stream.
Rational half_genus_calibration();

}  // namespace skewtop

#endif  // SKEWTOP_AIRY_HPP
