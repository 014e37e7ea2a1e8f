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

#ifndef SKEWTOP_RATIONAL_HPP
#define SKEWTOP_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "skewtop/error.hpp"

namespace skewtop {

/// Exact arbitrary-precision rational, always canonical (denominator > 0,
/// lowest terms). Every arithmetic operator of mpq_class re-canonicalizes.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Serializes as "p/q"; the denominator is omitted when it is 1.
std::string to_string(const Rational& q);

/// Accepts "p", "p/q" and (for convenience on the command line) finite
/// decimal literals such as "0.25" or "-1.5".
Rational parse_rational(std::string_view text);

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) {
    throw DomainError("rational with zero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

double to_double(const Rational& q);

BigInt factorial(unsigned n);
/// (n)!! with the conventions (-1)!! = 0!! = 1.
BigInt double_factorial(int n);
BigInt binomial(unsigned n, unsigned k);

/// q^e for integer e (negative exponents invert; 0^0 = 1).
Rational pow(const Rational& q, int e);

/// Exact sign of (-1)^n.
inline int minus_one_pow(long n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace skewtop

#endif  // SKEWTOP_RATIONAL_HPP
