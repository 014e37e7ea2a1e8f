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

#include "skewtop/series_engine.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "skewtop/skew_matrix.hpp"

namespace skewtop {

namespace {

void partitions_rec(int n, int max_part, int max_len, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  if (max_len == 0) return;
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, max_len - 1, cur, out);
    cur.pop_back();
  }
}

class CharacterTable {
 public:
  BigInt chi(const Partition& lambda, const Partition& rho) { return eval(lambda, rho, 0); }

 private:
  BigInt eval(const Partition& lambda, const Partition& rho, std::size_t pos) {
    if (pos == rho.size()) return lambda.empty() ? BigInt(1) : BigInt(0);
    Partition rest(rho.begin() + static_cast<std::ptrdiff_t>(pos), rho.end());
    auto key = std::make_pair(lambda, rest);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // Beta numbers: removing a rim hook of length r moves one bead from b to
    // b - r; the sign counts the beads jumped over.
    const int r = rho[pos];
    const int L = static_cast<int>(lambda.size());
    std::vector<int> beta(L);
    for (int i = 0; i < L; ++i) beta[i] = lambda[i] + L - 1 - i;
    BigInt total(0);
    for (int b : beta) {
      const int target = b - r;
      if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
      int between = 0;
      std::vector<int> nb;
      for (int x : beta) {
        if (x > target && x < b) ++between;
        if (x != b) nb.push_back(x);
      }
      nb.push_back(target);
      std::sort(nb.rbegin(), nb.rend());
      Partition next;
      for (int i = 0; i < L; ++i) {
        const int part = nb[i] - (L - 1 - i);
        if (part > 0) next.push_back(part);
      }
      BigInt sub = eval(next, rho, pos + 1);
      if (between % 2 == 1) sub = -sub;
      total += sub;
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

  std::map<std::pair<Partition, Partition>, BigInt> memo_;
};

// Exact solve of a dense square system by Gaussian elimination.
std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw DomainError("singular power-sum transition matrix");
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t c = 0; c < n; ++c) b[c] /= a[c][c];
  return b;
}

// Number of ways to distribute the parts of rho over variables so that
// variable v receives exactly target[v].
long count_assignments(const Partition& rho, std::size_t pos, std::vector<int>& remaining) {
  if (pos == rho.size()) {
    return std::all_of(remaining.begin(), remaining.end(), [](int x) { return x == 0; }) ? 1 : 0;
  }
  long total = 0;
  for (auto& rem : remaining) {
    if (rem < rho[pos]) continue;
    rem -= rho[pos];
    total += count_assignments(rho, pos + 1, remaining);
    rem += rho[pos];
  }
  return total;
}

Rational gaussian_moment_sixth(int b) {
  // E[z^b] for z ~ N(0, 1/6)
  if (b % 2 == 1) return Rational(0);
  Rational m(double_factorial(b - 1), BigInt(1));
  return m * pow(Rational(1, 6), b / 2);
}

PowerSumSeries make_power_sum_series(int step, int order) {
  PowerSumSeries ps;
  for (int m = step; m <= order; m += step) ps.indices.push_back(m);
  ps.series = MultiSeries(ps.indices, order);
  return ps;
}

}  // namespace

std::vector<Partition> partitions(int n, int max_part, int max_len) {
  std::vector<Partition> out;
  if (n < 0) return out;
  Partition cur;
  partitions_rec(n, max_part, max_len, cur, out);
  return out;
}

std::vector<Partition> partitions(int n) { return partitions(n, n, n); }

BigInt character(const Partition& lambda, const Partition& rho) {
  CharacterTable table;
  return table.chi(lambda, rho);
}

BigInt z_rho(const Partition& rho) {
  BigInt z(1);
  for (std::size_t a = 0; a < rho.size();) {
    std::size_t b = a;
    while (b < rho.size() && rho[b] == rho[a]) ++b;
    const auto c = static_cast<unsigned>(b - a);
    BigInt mc;
    mpz_ui_pow_ui(mc.get_mpz_t(), static_cast<unsigned long>(rho[a]), c);
    z *= mc * factorial(c);
    a = b;
  }
  return z;
}

Rational PowerSumSeries::coefficient(const std::vector<int>& ms) const {
  Exponents e(indices.size(), 0);
  for (int m : ms) {
    auto it = std::find(indices.begin(), indices.end(), m);
    if (it == indices.end()) return Rational(0);
    ++e[static_cast<std::size_t>(it - indices.begin())];
  }
  return series.coefficient(e);
}

std::map<std::vector<int>, Rational> PowerSumSeries::terms() const {
  std::map<std::vector<int>, Rational> out;
  for (const auto& [e, c] : series.terms()) {
    std::vector<int> ms;
    for (std::size_t r = e.size(); r-- > 0;) {
      for (int t = 0; t < e[r]; ++t) ms.push_back(indices[r]);
    }
    out.emplace(std::move(ms), c);
  }
  return out;
}

std::string PowerSumSeries::to_string() const {
  std::vector<std::string> names;
  for (int m : indices) names.push_back("p" + std::to_string(m));
  return series.to_string(names);
}

std::vector<Rational> one_dim_expectations(int j, int R) {
  if (j < 0 || R < 0) throw DomainError("one_dim_expectations needs j, R >= 0");
  // Polynomials in (w, z) stored as poly[a][b] = coefficient of w^a z^b.
  const int zmax = 4 * R + 2 * j;
  using Poly = std::vector<std::vector<Rational>>;
  auto blank = [&] { return Poly(R + 1, std::vector<Rational>(zmax + 1, Rational(0))); };
  auto mul = [&](const Poly& p, const Poly& q) {
    Poly r = blank();
    for (int a1 = 0; a1 <= R; ++a1) {
      for (int b1 = 0; b1 <= zmax; ++b1) {
        if (p[a1][b1] == 0) continue;
        for (int a2 = 0; a1 + a2 <= R; ++a2) {
          for (int b2 = 0; b1 + b2 <= zmax; ++b2) {
            if (q[a2][b2] != 0) r[a1 + a2][b1 + b2] += p[a1][b1] * q[a2][b2];
          }
        }
      }
    }
    return r;
  };

  Poly v = blank();
  if (R >= 1) v[1][3] = 2;
  if (R >= 2) v[2][4] = Rational(-1, 2);

  Poly e = blank();
  e[0][0] = 1;
  Poly power = blank();
  power[0][0] = 1;
  for (int n = 1; n <= R; ++n) {
    power = mul(power, v);
    for (auto& row : power) {
      for (auto& c : row) c /= n;
    }
    for (int a = 0; a <= R; ++a) {
      for (int b = 0; b <= zmax; ++b) e[a][b] += power[a][b];
    }
  }

  Poly vdm = blank();
  for (int r = 0; r <= 2 * j && r <= R; ++r) {
    vdm[r][r] = Rational(binomial(static_cast<unsigned>(2 * j), static_cast<unsigned>(r))) * minus_one_pow(r);
  }
  e = mul(e, vdm);

  std::vector<Rational> out(R + 1, Rational(0));
  for (int a = 0; a <= R; ++a) {
    for (int b = 0; b <= zmax; ++b) {
      if (e[a][b] != 0) out[a] += e[a][b] * gaussian_moment_sixth(b);
    }
  }
  return out;
}

std::map<Partition, Rational> partition_schur(int k, int R) {
  if (k < 1) throw DomainError("partition series needs k >= 1");
  std::vector<std::vector<Rational>> c;
  for (int j = 0; j < k; ++j) c.push_back(one_dim_expectations(j, R));
  auto coef = [&](int j, int m) { return (m < 0 || m > R) ? Rational(0) : c[j][m]; };

  std::map<Partition, Rational> out;
  for (int n = 0; n <= R; ++n) {
    for (const auto& lambda : partitions(n, n, k)) {
      std::vector<Rational> mat(static_cast<std::size_t>(k * k));
      for (int j = 0; j < k; ++j) {
        for (int l = 0; l < k; ++l) {
          const int part = l < static_cast<int>(lambda.size()) ? lambda[l] : 0;
          mat[static_cast<std::size_t>(j * k + l)] = coef(j, part + j - l);
        }
      }
      Rational d = determinant(std::move(mat), static_cast<std::size_t>(k));
      if (d != 0) out.emplace(lambda, d);
    }
  }
  return out;
}

PowerSumSeries partition_power_sums(int k, int order) {
  if (order < 0) throw DomainError("negative truncation order");
  const int R = order / 2;
  auto schur = partition_schur(k, R);
  PowerSumSeries ps = make_power_sum_series(2, order);
  CharacterTable table;
  for (const auto& [lambda, sc] : schur) {
    const int n = std::accumulate(lambda.begin(), lambda.end(), 0);
    for (const auto& rho : partitions(n)) {
      BigInt chi = table.chi(lambda, rho);
      if (chi == 0) continue;
      Exponents e(ps.indices.size(), 0);
      for (int part : rho) ++e[static_cast<std::size_t>(part - 1)];
      Rational term(chi, z_rho(rho));
      term.canonicalize();
      ps.series.add_term(e, sc * term);
    }
  }
  return ps;
}

MultiSeries expand_power_sums(const PowerSumSeries& ps, int k) {
  if (k < 1) throw DomainError("expand_power_sums needs k >= 1");
  const int order = ps.series.order();
  const auto nv = static_cast<std::size_t>(k);
  std::vector<MultiSeries> p;
  for (int m : ps.indices) {
    MultiSeries pm(nv, order);
    for (std::size_t v = 0; v < nv; ++v) {
      Exponents e(nv, 0);
      e[v] = m;
      pm.add_term(e, Rational(1));
    }
    p.push_back(std::move(pm));
  }
  MultiSeries out(nv, order);
  for (const auto& [e, c] : ps.series.terms()) {
    MultiSeries term = MultiSeries::constant(nv, order, c);
    for (std::size_t r = 0; r < e.size(); ++r) {
      for (int t = 0; t < e[r]; ++t) term = term * p[r];
    }
    out += term;
  }
  return out;
}

MultiSeries partition_series(int k, int order) {
  if (k < 1) throw DomainError("partition series needs k >= 1");
  if (order > 16) throw GuardError("partition_series guard: order <= 16");
  if (k > 16) throw GuardError("partition_series guard: k <= 16");
  return expand_power_sums(partition_power_sums(k, order), k);
}

PowerSumSeries to_power_sums(const MultiSeries& s) {
  if (!s.is_symmetric()) throw DomainError("to_power_sums needs a symmetric series");
  const int k = static_cast<int>(s.nvars());
  const int step = s.is_even_in_each_variable() ? 2 : 1;
  const int top = s.order() / step;
  if (top > k) {
    throw DomainError("ambiguous power-sum form: need at least " + std::to_string(top) + " variables, have " +
                      std::to_string(k));
  }
  PowerSumSeries ps = make_power_sum_series(step, s.order());
  for (int n = 0; n <= top; ++n) {
    const auto basis = partitions(n);
    const std::size_t sz = basis.size();
    std::vector<std::vector<Rational>> a(sz, std::vector<Rational>(sz));
    std::vector<Rational> b(sz);
    bool any = false;
    for (std::size_t row = 0; row < sz; ++row) {
      const Partition& lambda = basis[row];
      Exponents e(static_cast<std::size_t>(k), 0);
      for (std::size_t v = 0; v < lambda.size(); ++v) e[v] = lambda[v] * step;
      b[row] = s.coefficient(e);
      if (b[row] != 0) any = true;
      for (std::size_t col = 0; col < sz; ++col) {
        std::vector<int> target(static_cast<std::size_t>(k), 0);
        for (std::size_t v = 0; v < lambda.size(); ++v) target[v] = lambda[v];
        a[row][col] = Rational(count_assignments(basis[col], 0, target));
      }
    }
    if (!any) continue;
    const auto x = solve(std::move(a), std::move(b));
    for (std::size_t col = 0; col < sz; ++col) {
      if (x[col] == 0) continue;
      Exponents e(ps.indices.size(), 0);
      for (int part : basis[col]) ++e[static_cast<std::size_t>(part - 1)];
      ps.series.add_term(e, x[col]);
    }
  }
  // Round trip guards against symmetric input whose monomials are not all
  // reachable (e.g. mixed parity).
  if (expand_power_sums(ps, k) != s.truncated(s.order())) {
    throw DomainError("series is not expressible in power sums of the detected parity");
  }
  return ps;
}

PowerSumSeries log_power_sums(const PowerSumSeries& z) {
  PowerSumSeries out;
  out.indices = z.indices;
  out.series = log_series(z.series);
  return out;
}

PowerSumSeries universal_free_energy(int order) {
  if (order > 24) throw GuardError("universal_free_energy guard: order <= 24");
  if (order < 0) throw DomainError("negative truncation order");
  const int k = std::max(1, order / 2);
  return log_power_sums(partition_power_sums(k, order));
}

}  // namespace skewtop
