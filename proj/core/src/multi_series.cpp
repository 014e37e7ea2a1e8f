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

#include "skewtop/multi_series.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace skewtop {

MultiSeries::MultiSeries(std::size_t nvars, int order) : MultiSeries(std::vector<int>(nvars, 1), order) {}

MultiSeries::MultiSeries(std::vector<int> weights, int order) : weights_(std::move(weights)), order_(order) {
  for (int w : weights_) {
    if (w <= 0) throw DomainError("series variable weights must be positive");
  }
  if (order < 0) throw DomainError("negative truncation order");
}

MultiSeries MultiSeries::constant(std::size_t nvars, int order, const Rational& c) {
  MultiSeries s(nvars, order);
  s.add_term(Exponents(nvars, 0), c);
  return s;
}

MultiSeries MultiSeries::variable(std::size_t nvars, int order, std::size_t v) {
  MultiSeries s(nvars, order);
  Exponents e(nvars, 0);
  e.at(v) = 1;
  s.add_term(e, Rational(1));
  return s;
}

int MultiSeries::degree(const Exponents& e) const {
  int d = 0;
  for (std::size_t v = 0; v < e.size(); ++v) d += weights_[v] * e[v];
  return d;
}

Rational MultiSeries::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiSeries::constant_term() const { return coefficient(Exponents(nvars(), 0)); }

void MultiSeries::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != nvars()) throw DomainError("exponent vector has the wrong length");
  for (int x : e) {
    if (x < 0) throw DomainError("negative exponent in a power series");
  }
  if (c == 0 || degree(e) > order_) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiSeries::set_term(const Exponents& e, const Rational& c) {
  terms_.erase(e);
  add_term(e, c);
}

MultiSeries MultiSeries::truncated(int order) const {
  MultiSeries out(weights_, order);
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  return out;
}

MultiSeries MultiSeries::homogeneous(int deg) const {
  MultiSeries out(weights_, order_);
  for (const auto& [e, c] : terms_) {
    if (degree(e) == deg) out.terms_.emplace(e, c);
  }
  return out;
}

void MultiSeries::check_compatible(const MultiSeries& o) const {
  if (weights_ != o.weights_) throw DomainError("series over different variables");
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& o) {
  check_compatible(o);
  order_ = std::min(order_, o.order_);
  for (auto it = terms_.begin(); it != terms_.end();) {
    it = degree(it->first) > order_ ? terms_.erase(it) : std::next(it);
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiSeries& MultiSeries::operator-=(const MultiSeries& o) { return *this += -o; }

MultiSeries& MultiSeries::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiSeries MultiSeries::operator-() const {
  MultiSeries out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
  a.check_compatible(b);
  MultiSeries out(a.weights_, std::min(a.order_, b.order_));
  std::vector<std::pair<int, const std::pair<const Exponents, Rational>*>> bt;
  bt.reserve(b.terms_.size());
  for (const auto& t : b.terms_) bt.emplace_back(b.degree(t.first), &t);
  std::sort(bt.begin(), bt.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  Exponents e(a.nvars());
  for (const auto& [ea, ca] : a.terms_) {
    const int da = a.degree(ea);
    for (const auto& [db, tb] : bt) {
      if (da + db > out.order_) break;
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + tb->first[v];
      out.add_term(e, ca * tb->second);
    }
  }
  return out;
}

bool MultiSeries::operator==(const MultiSeries& o) const {
  return weights_ == o.weights_ && terms_ == o.terms_;
}

bool MultiSeries::is_even_in_each_variable() const {
  for (const auto& [e, c] : terms_) {
    for (int x : e) {
      if (x % 2 != 0) return false;
    }
  }
  return true;
}

bool MultiSeries::is_symmetric() const {
  for (std::size_t v = 0; v + 1 < nvars(); ++v) {
    if (weights_[v] != weights_[v + 1]) return false;
  }
  for (const auto& [e, c] : terms_) {
    for (std::size_t v = 0; v + 1 < e.size(); ++v) {
      Exponents f = e;
      std::swap(f[v], f[v + 1]);
      if (coefficient(f) != c) return false;
    }
  }
  return true;
}

std::string MultiSeries::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<int, const std::pair<const Exponents, Rational>*>> sorted;
  for (const auto& t : terms_) sorted.emplace_back(degree(t.first), &t);
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, t] : sorted) {
    Rational c = t->second;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    } else if (c < 0) {
      os << "-";
      c = -c;
    }
    first = false;
    bool has_var = false;
    std::ostringstream mon;
    for (std::size_t v = 0; v < t->first.size(); ++v) {
      if (t->first[v] == 0) continue;
      if (has_var) mon << "*";
      mon << (v < names.size() ? names[v] : "x" + std::to_string(v));
      if (t->first[v] != 1) mon << "^" << t->first[v];
      has_var = true;
    }
    if (!has_var) {
      os << skewtop::to_string(c);
    } else if (c == 1) {
      os << mon.str();
    } else {
      os << "(" << skewtop::to_string(c) << ")*" << mon.str();
    }
  }
  return os.str();
}

namespace {

int min_positive_degree(const MultiSeries& h) {
  int m = h.order() + 1;
  for (const auto& [e, c] : h.terms()) m = std::min(m, h.degree(e));
  return m;
}

}  // namespace

MultiSeries log_series(const MultiSeries& z) {
  if (z.constant_term() != 1) throw DomainError("log_series needs constant term 1");
  MultiSeries h = z;
  h.set_term(Exponents(z.nvars(), 0), Rational(0));
  MultiSeries out(z.weights(), z.order());
  if (h.is_zero()) return out;
  const int step = min_positive_degree(h);
  MultiSeries power = h;
  for (int n = 1; n * step <= z.order(); ++n) {
    Rational c(n % 2 == 1 ? 1 : -1, n);
    c.canonicalize();
    out += power * c;
    power = power * h;
  }
  return out;
}

MultiSeries exp_series(const MultiSeries& z) {
  if (z.constant_term() != 0) throw DomainError("exp_series needs constant term 0");
  MultiSeries out(z.weights(), z.order());
  out.add_term(Exponents(z.nvars(), 0), Rational(1));
  if (z.is_zero()) return out;
  const int step = min_positive_degree(z);
  MultiSeries power = z;
  Rational fact(1);
  for (int n = 1; n * step <= z.order(); ++n) {
    fact *= n;
    out += power * (Rational(1) / fact);
    power = power * z;
  }
  return out;
}

}  // namespace skewtop
