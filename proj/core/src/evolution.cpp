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

#include "skewtop/evolution.hpp"

#include <algorithm>
#include <utility>

#include "skewtop/duality.hpp"

namespace skewtop {

void LaurentSeries::add(int v_power, const SSeries& coeff) {
  if (coeff.nvars() != s_vars_) throw DomainError("Laurent coefficient over the wrong variables");
  auto it = terms_.find(v_power);
  if (it == terms_.end()) {
    SSeries c = coeff.truncated(s_order_);
    if (!c.is_zero()) terms_.emplace(v_power, std::move(c));
    return;
  }
  it->second += coeff.truncated(s_order_);
  if (it->second.is_zero()) terms_.erase(it);
}

SSeries LaurentSeries::coefficient(int v_power) const {
  auto it = terms_.find(v_power);
  return it == terms_.end() ? SSeries(s_vars_, s_order_) : it->second;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.s_vars_ != b.s_vars_) throw DomainError("Laurent series over different variables");
  LaurentSeries out(a.s_vars_, std::min(a.s_order_, b.s_order_));
  for (const auto& [pa, ca] : a.terms_) {
    for (const auto& [pb, cb] : b.terms_) out.add(pa + pb, ca * cb);
  }
  return out;
}

namespace {

// a + b i with exact parts.
struct Complex {
  Rational re;
  Rational im;

  bool is_zero() const { return re == 0 && im == 0; }
};

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex inverse(const Complex& a) {
  const Rational n = a.re * a.re + a.im * a.im;
  if (n == 0) throw DomainError("division by zero in a complex series");
  return {a.re / n, -a.im / n};
}

// i^n.
Complex i_pow(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0:
      return {Rational(1), Rational(0)};
    case 1:
      return {Rational(0), Rational(1)};
    case 2:
      return {Rational(-1), Rational(0)};
    default:
      return {Rational(0), Rational(-1)};
  }
}

// Dense series in (e, s) truncated at e <= E, s <= S.
class BiSeries {
 public:
  BiSeries(int E, int S) : E_(E), S_(S), c_((E + 1) * (S + 1)) {}

  int E() const { return E_; }
  int S() const { return S_; }
  Complex& at(int e, int s) { return c_[e * (S_ + 1) + s]; }
  const Complex& at(int e, int s) const { return c_[e * (S_ + 1) + s]; }

  // c0 + ce e + cs s.
  static BiSeries linear(int E, int S, const Complex& c0, const Complex& ce, const Complex& cs) {
    BiSeries b(E, S);
    b.at(0, 0) = c0;
    if (E >= 1) b.at(1, 0) = ce;
    if (S >= 1) b.at(0, 1) = cs;
    return b;
  }

  friend BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    BiSeries out(a.E_, a.S_);
    for (int e1 = 0; e1 <= a.E_; ++e1) {
      for (int s1 = 0; s1 <= a.S_; ++s1) {
        const Complex& x = a.at(e1, s1);
        if (x.is_zero()) continue;
        for (int e2 = 0; e1 + e2 <= a.E_; ++e2) {
          for (int s2 = 0; s1 + s2 <= a.S_; ++s2) {
            const Complex& y = b.at(e2, s2);
            if (y.is_zero()) continue;
            Complex& z = out.at(e1 + e2, s1 + s2);
            z = z + x * y;
          }
        }
      }
    }
    return out;
  }

  BiSeries inverse() const {
    const Complex c0inv = skewtop::inverse(at(0, 0));
    BiSeries g(E_, S_);
    for (int e = 0; e <= E_; ++e) {
      for (int s = 0; s <= S_; ++s) {
        if (e == 0 && s == 0) {
          g.at(0, 0) = c0inv;
          continue;
        }
        Complex acc;
        for (int e1 = 0; e1 <= e; ++e1) {
          for (int s1 = 0; s1 <= s; ++s1) {
            if (e1 == 0 && s1 == 0) continue;
            const Complex& f = at(e1, s1);
            if (f.is_zero()) continue;
            acc = acc + f * g.at(e - e1, s - s1);
          }
        }
        g.at(e, s) = Complex{Rational(0), Rational(0)} - acc * c0inv;
      }
    }
    return g;
  }

 private:
  int E_;
  int S_;
  std::vector<Complex> c_;
};

// exp(i (b + e) s) = sum_n i^n (b + e)^n s^n / n!.
BiSeries exp_i_shift(int E, int S, const Rational& b) {
  BiSeries out(E, S);
  for (int n = 0; n <= S; ++n) {
    const Rational inv_fact = Rational(1) / Rational(factorial(static_cast<unsigned>(n)));
    for (int e = 0; e <= std::min(E, n); ++e) {
      const Rational c = Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(e))) *
                         pow(b, n - e) * inv_fact;
      out.at(e, n) = i_pow(n) * Complex{c, Rational(0)};
    }
  }
  return out;
}

// exp(-s^2/4) times `s_coeffs` (real part), as a one-variable series.
SSeries times_gaussian(const std::vector<Rational>& s_coeffs, int order, const Rational& sign) {
  SSeries out(1, order);
  for (int p = 0; p < static_cast<int>(s_coeffs.size()); ++p) {
    if (s_coeffs[p] == 0) continue;
    for (int q = 0; p + 2 * q <= order; ++q) {
      const Rational g = pow(sign * make_rational(1, 4), q) / Rational(factorial(static_cast<unsigned>(q)));
      out.add_term({p + 2 * q}, s_coeffs[p] * g);
    }
  }
  return out;
}

SSeries u1_zero_source(std::size_t N, int order) {
  // Single pole of order 2N-1 at the origin; the s powers collapse to s^{2q}.
  const int n2 = static_cast<int>(2 * N);
  std::vector<Rational> coeffs(order + 1);
  for (int i = 0; i <= n2 - 2; ++i) {
    for (int r = 0; i + r <= n2 - 2; ++r) {
      const int q = n2 - 2 - i - r;
      if (2 * q > order) continue;
      Rational c = Rational(binomial(static_cast<unsigned>(n2), static_cast<unsigned>(i))) *
                   pow(Rational(2), i - n2) * pow(Rational(4), r + 1) /
                   Rational(factorial(static_cast<unsigned>(q)));
      if (i % 2 != 0) c = -c;
      coeffs[2 * q] += c / static_cast<long>(N);
    }
  }
  return times_gaussian(coeffs, order, Rational(-1));
}

}  // namespace

SSeries u1_series(const SourceSpec& a, int order) {
  if (a.empty()) throw DomainError("u1_series needs at least one source value");
  if (order < 0) throw DomainError("negative truncation order");
  if (order > 20) throw GuardError("u1_series order exceeds the guard of 20");
  const std::size_t N = a.size();

  std::size_t zeros = 0;
  for (const auto& v : a.values) zeros += (v == 0);
  if (zeros == N) return u1_zero_source(N, order);
  if (zeros != 0) throw DomainError("u1_series: mixing zero and nonzero sources is unsupported");

  bool all_equal = true;
  bool all_distinct = true;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = i + 1; j < N; ++j) {
      const bool same = a.values[i] * a.values[i] == a.values[j] * a.values[j];
      all_equal = all_equal && same;
      all_distinct = all_distinct && !same;
    }
  }
  if (!all_equal && !all_distinct) {
    throw DomainError("u1_series: partially coinciding source magnitudes are unsupported");
  }

  // Poles b with multiplicity m, each holding the indices of sources with a^2 = b^2.
  struct Pole {
    Rational b;
    int m;
  };
  std::vector<Pole> poles;
  if (all_equal && N > 1) {
    const Rational b = abs(a.values[0]);
    poles.push_back({b, static_cast<int>(N)});
    poles.push_back({-b, static_cast<int>(N)});
  } else {
    for (const auto& v : a.values) {
      poles.push_back({Rational(abs(v)), 1});
      poles.push_back({Rational(-abs(v)), 1});
    }
  }

  const int S = order + 1;
  const Complex zero{Rational(0), Rational(0)};
  const Complex one{Rational(1), Rational(0)};
  const Complex half_i{Rational(0), make_rational(1, 2)};
  std::vector<Complex> total(S + 1, zero);

  for (const auto& [b, m] : poles) {
    const int E = m - 1;
    const Complex cb{b, Rational(0)};
    const Complex two_b{2 * b, Rational(0)};
    BiSeries g = BiSeries::linear(E, S, one, zero, zero);
    for (const auto& av : a.values) {
      const Rational a2 = av * av;
      if (a2 == b * b) {
        // (e + 2b + i s/2) / (e + 2b)
        g = g * BiSeries::linear(E, S, two_b, one, half_i);
        g = g * BiSeries::linear(E, S, two_b, one, zero).inverse();
      } else {
        // ((b + e + i s/2)^2 - a^2) / ((b + e)^2 - a^2)
        BiSeries shifted = BiSeries::linear(E, S, cb, one, half_i);
        BiSeries num = shifted * shifted;
        num.at(0, 0) = num.at(0, 0) - Complex{a2, Rational(0)};
        BiSeries plain = BiSeries::linear(E, S, cb, one, zero);
        BiSeries den = plain * plain;
        den.at(0, 0) = den.at(0, 0) - Complex{a2, Rational(0)};
        g = g * num * den.inverse();
      }
    }
    // (b + e) / (i (b + e) - s/4)
    const BiSeries u = BiSeries::linear(E, S, cb, one, zero);
    const BiSeries den =
        BiSeries::linear(E, S, Complex{Rational(0), b}, Complex{Rational(0), Rational(1)},
                         Complex{make_rational(-1, 4), Rational(0)});
    g = g * u * den.inverse();
    g = g * exp_i_shift(E, S, b);
    // (e + i s/2)^m
    BiSeries lead = BiSeries::linear(E, S, one, zero, zero);
    for (int t = 0; t < m; ++t) lead = lead * BiSeries::linear(E, S, zero, one, half_i);
    const BiSeries full = lead * g;
    for (int s = 0; s <= S; ++s) total[s] = total[s] + full.at(E, s);
  }

  if (!total[0].is_zero()) throw Error("u1_series: residue sum is not divisible by s");
  std::vector<Rational> coeffs(order + 1);
  for (int s = 1; s <= S; ++s) {
    if (total[s].im != 0) throw Error("u1_series: residue sum has an imaginary part");
    coeffs[s - 1] = total[s].re / static_cast<long>(N);
  }
  return times_gaussian(coeffs, order, Rational(-1));
}

SSeries u_replica_series(int order) {
  if (order < 0) throw DomainError("negative truncation order");
  if (order > 30) throw GuardError("u_replica_series order exceeds the guard of 30");
  SSeries out(1, order);
  // (4/s^2) sinh(s^2/4) = sum_k (s^2/4)^{2k} / (2k+1)!
  for (int k = 0; 4 * k <= order; ++k) {
    out.add_term({4 * k}, pow(make_rational(1, 4), 2 * k) / Rational(factorial(2 * k + 1)));
  }
  // int_0^{s^2/4} sinh(x)/x dx = sum_k (s^2/4)^{2k+1} / ((2k+1)! (2k+1))
  for (int k = 0; 4 * k + 2 <= order; ++k) {
    out.add_term({4 * k + 2}, pow(make_rational(1, 4), 2 * k + 1) /
                                  (Rational(factorial(2 * k + 1)) * (2 * k + 1)));
  }
  return out;
}

SSeries u_replica_series_formal(int order) {
  if (order < 0) throw DomainError("negative truncation order");
  if (order > 30) throw GuardError("u_replica_series_formal order exceeds the guard of 30");
  const int S = order + 1;
  auto mono = [S](int p, const Rational& c) {
    SSeries t(1, S);
    t.add_term({p}, c);
    return t;
  };

  // log(1 + s/(2v)) = sum_m (-1)^{m+1}/m (s/2)^m v^{-m}
  LaurentSeries log_factor(1, S);
  for (int m = 1; m <= S; ++m) {
    log_factor.add(-m, mono(m, Rational(minus_one_pow(m + 1)) * pow(make_rational(1, 2), m) / m));
  }
  // (v + s/2)/(v + s/4) = 1 + (s/4) sum_r (-s/4)^r v^{-r-1}
  LaurentSeries ratio(1, S);
  ratio.add(0, mono(0, Rational(1)));
  for (int r = 0; r + 1 <= S; ++r) {
    ratio.add(-r - 1, mono(r + 1, make_rational(1, 4) * pow(make_rational(-1, 4), r)));
  }
  // exp(s v)
  LaurentSeries expo(1, S);
  for (int p = 0; p <= S; ++p) expo.add(p, mono(p, Rational(1) / Rational(factorial(p))));

  const SSeries res = (log_factor * ratio * expo).residue();
  std::vector<Rational> coeffs(order + 1);
  if (res.coefficient({0}) != 0) throw Error("formal replica residue is not divisible by s");
  for (int p = 1; p <= S; ++p) coeffs[p - 1] = 2 * res.coefficient({p});
  return times_gaussian(coeffs, order, Rational(1));
}

namespace {

// shc(z) = sinh(z)/z = sum_k z^{2k}/(2k+1)! for z without constant term.
MultiSeries shc(const MultiSeries& z) {
  MultiSeries out(z.weights(), z.order());
  out.add_term(Exponents(z.nvars(), 0), Rational(1));
  const MultiSeries z2 = z * z;
  MultiSeries power = z2;
  for (int k = 1; !power.is_zero(); ++k) {
    out += power * (Rational(1) / Rational(factorial(2 * k + 1)));
    power = power * z2;
  }
  return out;
}

MultiSeries power_of(const MultiSeries& x, int e) {
  MultiSeries out(x.weights(), x.order());
  out.add_term(Exponents(x.nvars(), 0), Rational(1));
  for (int t = 0; t < e; ++t) out = out * x;
  return out;
}

// Coefficients c_m (series in s_1..s_n) of y^{2m} in prod_i shc(s_i y / 4),
// for 4m <= budget, each truncated at `order`.
std::vector<MultiSeries> sinh_product_coefficients(int n, int budget, int order) {
  const std::size_t nv = static_cast<std::size_t>(n) + 1;
  MultiSeries prod(nv, budget);
  prod.add_term(Exponents(nv, 0), Rational(1));
  for (int i = 0; i < n; ++i) {
    MultiSeries arg(nv, budget);
    Exponents e(nv, 0);
    e[i] = 1;
    e[n] = 1;
    arg.add_term(e, make_rational(1, 4));
    prod = prod * shc(arg);
  }
  std::vector<MultiSeries> out(budget / 4 + 1, MultiSeries(static_cast<std::size_t>(n), order));
  for (const auto& [e, c] : prod.terms()) {
    const int ypow = e[n];
    if (ypow % 2 != 0 || ypow / 2 >= static_cast<int>(out.size())) continue;
    out[ypow / 2].add_term(Exponents(e.begin(), e.begin() + n), c);
  }
  return out;
}

MultiSeries even_part(const MultiSeries& s) {
  MultiSeries out(s.weights(), s.order());
  for (const auto& [e, c] : s.terms()) {
    if (std::all_of(e.begin(), e.end(), [](int x) { return x % 2 == 0; })) out.add_term(e, c);
  }
  return out;
}

}  // namespace

SSeries theorem3_series(int n, int order) {
  if (n < 1) throw DomainError("theorem3_series needs n >= 1");
  if (order < 0) throw DomainError("negative truncation order");
  if (order > 16) throw GuardError("theorem3_series order exceeds the guard of 16");
  const std::size_t nv = static_cast<std::size_t>(n);

  MultiSeries sigma(nv, order);
  MultiSeries prod_s(nv, order);
  prod_s.add_term(Exponents(nv, 1), Rational(1));
  for (std::size_t i = 0; i < nv; ++i) sigma += MultiSeries::variable(nv, order, i);

  // (1/(2 sigma^2)) prod 4 sh(s_i sigma/4) = (1/2) sigma^{n-2} prod s_i prod shc(s_i sigma/4)
  MultiSeries first(nv, order);
  first.add_term(Exponents(nv, 0), make_rational(1, 2));
  if (n >= 2) first = first * power_of(sigma, n - 2) * prod_s;
  for (std::size_t i = 0; i < nv; ++i) {
    first = first * shc(MultiSeries::variable(nv, order, i) * sigma * make_rational(1, 4));
  }

  // (1/2) int_0^sigma dy/y prod sh(s_i y/4) = (1/2) prod(s_i/4) sum_m c_m sigma^{n+2m}/(n+2m)
  MultiSeries integral(nv, order);
  const int budget = order - 2 * n;
  if (budget >= 0) {
    const auto c = sinh_product_coefficients(n, budget, order);
    const MultiSeries pref = prod_s * (make_rational(1, 2) * pow(make_rational(1, 4), n));
    for (int m = 0; m < static_cast<int>(c.size()); ++m) {
      if (c[m].is_zero()) continue;
      integral += pref * c[m] * power_of(sigma, n + 2 * m) * make_rational(1, n + 2 * m);
    }
  }

  // Summing over sign patterns keeps 2^n times the part even in every s_i.
  return even_part(first + integral) * pow(Rational(2), n);
}

SSeries u2_contour_series(int order) {
  if (order < 0) throw DomainError("negative truncation order");
  if (order > 12) throw GuardError("u2_contour_series order exceeds the guard of 12");
  const int D = order;
  auto gbin = [](int top, int i) {
    Rational r(1);
    for (int t = 0; t < i; ++t) r *= make_rational(top - t, t + 1);
    return r;
  };

  // Coefficient of 1/u_2 at large u_2: keys (s1 power, s2 power, u1 power).
  std::map<std::tuple<int, int, int>, Rational> inner;
  for (int r = 0; r <= D; ++r) {
    for (int q = 0; q <= D; ++q) {
      for (int i = 0; i <= D; ++i) {
        const int n = 2 * r + i + 2 * q + 2;
        if (i + n > D) continue;
        const Rational base = -gbin(-(2 * r + 1), i) * pow(make_rational(1, 2), i) /
                              Rational(factorial(static_cast<unsigned>(n)));
        for (int c = 0; c <= 2 * q + 1; ++c) {
          if (c + i + n > D) continue;
          const Rational coef = base * Rational(binomial(static_cast<unsigned>(2 * q + 1), static_cast<unsigned>(c))) *
                                pow(make_rational(1, 2), c);
          inner[{c, i + n, 2 * r + 2 * q + 1 - c}] += coef;
        }
      }
    }
  }

  // exp(s1 u1) log(1 + s1/(2 u1)), coefficient of 1/u_1.
  std::vector<Rational> acc((D + 1) * (D + 1));
  for (const auto& [key, cf] : inner) {
    const auto [a, b, e] = key;
    if (cf == 0) continue;
    for (int p = 0; p <= D; ++p) {
      const int m = p + e + 1;
      const int s1 = a + p + m;
      if (s1 + b > D) break;
      const Rational c = cf * Rational(minus_one_pow(m + 1)) / m * pow(make_rational(1, 2), m) /
                         Rational(factorial(static_cast<unsigned>(p)));
      acc[s1 * (D + 1) + b] += c;
    }
  }

  // Multiply by -exp((s1^2 + s2^2)/4).
  SSeries out(2, order);
  for (int a = 0; a <= D; ++a) {
    for (int b = 0; a + b <= D; ++b) {
      const Rational& c = acc[a * (D + 1) + b];
      if (c == 0) continue;
      for (int x = 0; a + b + 2 * x <= D; ++x) {
        for (int y = 0; a + b + 2 * x + 2 * y <= D; ++y) {
          const Rational g = pow(make_rational(1, 4), x + y) /
                             (Rational(factorial(static_cast<unsigned>(x))) * Rational(factorial(static_cast<unsigned>(y))));
          out.add_term({a + 2 * x, b + 2 * y}, -c * g);
        }
      }
    }
  }
  return out;
}

SSeries u2_closed_form_series(int order) {
  if (order < 0) throw DomainError("negative truncation order");
  if (order > 16) throw GuardError("u2_closed_form_series order exceeds the guard of 16");
  const MultiSeries s1 = MultiSeries::variable(2, order, 0);
  const MultiSeries s2 = MultiSeries::variable(2, order, 1);
  const MultiSeries sigma = s1 + s2;
  const MultiSeries delta = s1 - s2;
  const MultiSeries s12 = s1 * s2;
  const Rational q = make_rational(1, 4);

  MultiSeries out = s12 * make_rational(1, 8) * shc(s1 * sigma * q) * shc(s2 * sigma * q);
  out -= s12 * make_rational(1, 8) * shc(s1 * delta * q) * shc(s2 * delta * q);
  const int budget = order - 4;
  if (budget >= 0) {
    const auto c = sinh_product_coefficients(2, budget, order);
    for (int m = 0; m < static_cast<int>(c.size()); ++m) {
      if (c[m].is_zero()) continue;
      const MultiSeries diff = power_of(sigma, 2 * m + 2) - power_of(delta, 2 * m + 2);
      out += s12 * c[m] * diff * (make_rational(1, 32) / (2 * m + 2));
    }
  }
  return out;
}

bool cauchy_identity_check(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  const std::size_t n = x.size();
  if (n == 0 || y.size() != n) throw DomainError("Cauchy identity needs two lists of equal positive length");
  std::vector<Rational> x2(n), y2(n);
  for (std::size_t i = 0; i < n; ++i) {
    x2[i] = x[i] * x[i];
    y2[i] = y[i] * y[i];
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i < j && (x2[i] == x2[j] || y2[i] == y2[j])) throw DomainError("Cauchy identity: repeated squares");
      if (x2[i] == y2[j]) throw DomainError("Cauchy identity: x_i^2 = y_j^2");
    }
  }
  std::vector<Rational> m(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = Rational(1) / (x2[i] - y2[j]);
  }
  const Rational lhs = determinant(std::move(m), n);
  Rational num(1), den(1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) num *= (x2[i] - x2[j]) * (y2[i] - y2[j]);
    for (std::size_t j = 0; j < n; ++j) den *= x2[i] - y2[j];
  }
  const long sign = minus_one_pow(static_cast<long>(n * (n - 1) / 2));
  const Rational rhs = sign * num / den;
  return lhs == rhs;
}

std::pair<std::vector<Rational>, std::vector<Rational>> random_cauchy_points(std::size_t n,
                                                                             std::mt19937_64& rng) {
  for (;;) {
    std::vector<Rational> x(n), y(n), squares;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = random_small_rational(rng);
      y[i] = random_small_rational(rng);
      squares.push_back(x[i] * x[i]);
      squares.push_back(y[i] * y[i]);
    }
    std::sort(squares.begin(), squares.end());
    if (std::adjacent_find(squares.begin(), squares.end()) == squares.end()) return {x, y};
  }
}

}  // namespace skewtop
