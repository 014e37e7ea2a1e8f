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

#include <numeric>
#include <functional>
#include <utility>

#include "skewtop/oracle/oracle.hpp"

namespace skewtop::oracle {

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct RibbonCounter {
  std::vector<std::pair<int, int>> entries;  // index labels of each matrix entry
  int n_labels = 0;
  std::vector<long> by_loops;                // signed count per number of loops

  void pairings(std::vector<int>& free_slots, std::vector<std::pair<int, int>>& pairs) {
    if (free_slots.empty()) {
      twists(pairs);
      return;
    }
    const int first = free_slots.front();
    for (std::size_t t = 1; t < free_slots.size(); ++t) {
      const int partner = free_slots[t];
      std::vector<int> rest;
      for (std::size_t u = 1; u < free_slots.size(); ++u) {
        if (u != t) rest.push_back(free_slots[u]);
      }
      pairs.emplace_back(first, partner);
      pairings(rest, pairs);
      pairs.pop_back();
    }
  }

  // <X_ij X_kl> = c (d_ik d_jl - d_il d_jk): each pair is either untwisted
  // (i~k, j~l, +) or twisted (i~l, j~k, -).
  void twists(const std::vector<std::pair<int, int>>& pairs) {
    const std::size_t m = pairs.size();
    for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
      DisjointSets ds(n_labels);
      int sign = 1;
      for (std::size_t p = 0; p < m; ++p) {
        const auto [i, j] = entries[pairs[p].first];
        const auto [k, l] = entries[pairs[p].second];
        if ((mask >> p) & 1UL) {
          ds.unite(i, l);
          ds.unite(j, k);
          sign = -sign;
        } else {
          ds.unite(i, k);
          ds.unite(j, l);
        }
      }
      std::size_t loops = 0;
      for (int x = 0; x < n_labels; ++x) loops += (ds.find(x) == x);
      by_loops[loops] += sign;
    }
  }
};

}  // namespace

std::vector<Rational> ribbon_moment(const std::vector<int>& powers, const Rational& gamma) {
  if (gamma <= 0) throw DomainError("gamma must be positive");
  int degree = 0;
  int extra_d = 0;
  RibbonCounter rc;
  for (int a : powers) {
    if (a < 0) throw DomainError("negative trace power");
    if (a == 0) {
      ++extra_d;  // tr X^0 = d
      continue;
    }
    if (a == 1) return {Rational(0)};  // tr X = 0
    for (int k = 0; k < a; ++k) rc.entries.emplace_back(rc.n_labels + k, rc.n_labels + (k + 1) % a);
    rc.n_labels += a;
    degree += a;
  }
  if (degree > 12) throw GuardError("ribbon_moment supports total degree <= 12");
  std::vector<Rational> poly(static_cast<std::size_t>(rc.n_labels + extra_d + 1), Rational(0));
  if (degree % 2 != 0) return poly;
  rc.by_loops.assign(static_cast<std::size_t>(rc.n_labels + 1), 0);
  std::vector<int> slots(rc.entries.size());
  std::iota(slots.begin(), slots.end(), 0);
  std::vector<std::pair<int, int>> pairs;
  rc.pairings(slots, pairs);
  const Rational c = pow(Rational(1) / (4 * gamma), degree / 2);
  for (std::size_t loops = 0; loops < rc.by_loops.size(); ++loops) {
    if (rc.by_loops[loops] != 0) poly[loops + extra_d] = c * Rational(rc.by_loops[loops]);
  }
  return poly;
}

MultiSeries replica_correlator_series(int n, int order) {
  if (n < 1) throw DomainError("need at least one trace");
  if (order > 12) throw GuardError("replica_correlator_series supports order <= 12");
  const std::size_t nv = static_cast<std::size_t>(n);
  MultiSeries out(nv, order);
  std::vector<int> p(nv, 0);
  // Enumerate exponent vectors with total degree <= order.
  std::function<void(std::size_t, int)> rec = [&](std::size_t v, int left) {
    if (v == nv) {
      const auto poly = ribbon_moment(p, make_rational(1, 2));
      if (poly.size() < 2 || poly[1] == 0) return;
      Rational c = poly[1];
      for (int x : p) c /= Rational(factorial(static_cast<unsigned>(x)));
      out.add_term(p, c);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      p[v] = x;
      rec(v + 1, left - x);
    }
    p[v] = 0;
  };
  rec(0, order);
  return out;
}

}  // namespace skewtop::oracle
