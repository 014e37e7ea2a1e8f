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

namespace {

// Coefficient of u^q in E[eta^q] for eta ~ N(0, u^2/6).
Rational eta_moment_coefficient(int q) {
  return gaussian_moment_1d(q, make_rational(1, 6));
}

}  // namespace

MultiSeries direct_partition_k2(int order) {
  if (order < 0) throw DomainError("negative truncation order");
  if (order > 12) throw GuardError("direct_partition_k2 supports order <= 12");
  const int top = order + 2;

  // With lambda = 1/u and y = eta - lambda the exponent becomes
  // -3 lambda^2 eta^2 + 2 lambda eta^3 - eta^4/2 + const. P and Q are
  //   P(u) = u^2 E[(eta - lambda)^2 e^V],  Q(u) = E[e^V],  V = 2 eta^3/u - eta^4/2.
  std::vector<Rational> P(top + 1, Rational(0)), Q(top + 1, Rational(0));
  for (int a = 0; 2 * a <= top; ++a) {
    for (int b = 0; 2 * a + 4 * b <= top; ++b) {
      const Rational vertex = pow(Rational(2), a) * pow(make_rational(-1, 2), b) /
                              (Rational(factorial(static_cast<unsigned>(a))) *
                               Rational(factorial(static_cast<unsigned>(b))));
      const int q = 3 * a + 4 * b;
      const int base = 2 * a + 4 * b;  // u power of vertex * E[eta^q]
      Q[base] += vertex * eta_moment_coefficient(q);
      // (u eta - 1)^2 = u^2 eta^2 - 2 u eta + 1
      P[base] += vertex * eta_moment_coefficient(q);
      if (base + 2 <= top) P[base + 2] += -2 * vertex * eta_moment_coefficient(q + 1);
      if (base + 4 <= top) P[base + 4] += vertex * eta_moment_coefficient(q + 2);
    }
  }

  // Antisymmetric numerator u2^2 P(u1) Q(u2) - u1^2 P(u2) Q(u1), keyed by w-degrees (w = u^2).
  std::map<std::pair<int, int>, Rational> num;
  for (int i = 0; i <= top; i += 2) {
    for (int j = 0; i + j + 2 <= top; j += 2) {
      const Rational c = P[i] * Q[j];
      if (c == 0) continue;
      num[{i / 2, j / 2 + 1}] += c;
      num[{j / 2 + 1, i / 2}] -= c;
    }
  }

  // Divide each homogeneous w-component by (w2 - w1).
  MultiSeries out(2, order);
  for (int D = 1; 2 * D <= top; ++D) {
    Rational h_prev(0);
    for (int a = 0; a < D; ++a) {
      auto it = num.find({a, D - a});
      const Rational n_a = it == num.end() ? Rational(0) : it->second;
      const Rational h_a = n_a + h_prev;
      out.add_term({2 * a, 2 * (D - 1 - a)}, h_a);
      h_prev = h_a;
    }
    auto it = num.find({D, 0});
    const Rational n_d = it == num.end() ? Rational(0) : it->second;
    if (n_d != -h_prev) throw Error("direct_partition_k2: numerator is not divisible by w2 - w1");
  }
  const Rational c0 = out.constant_term();
  if (c0 == 0) throw Error("direct_partition_k2: vanishing constant term");
  return out * (Rational(1) / c0);
}

}  // namespace skewtop::oracle
