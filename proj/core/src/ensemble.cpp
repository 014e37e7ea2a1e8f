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

#include "skewtop/ensemble.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <unordered_map>

namespace skewtop {

GaussianEnsemble::GaussianEnsemble(std::size_t dim, Rational gamma)
    : dim_(dim), gamma_(std::move(gamma)), source_(dim) {
  if (dim == 0) throw DomainError("ensemble dimension must be positive");
  if (gamma_ <= 0) throw DomainError("ensemble weight gamma must be positive");
}

GaussianEnsemble::GaussianEnsemble(const SourceSpec& source, Rational gamma)
    : GaussianEnsemble(2 * source.size(), std::move(gamma)) {
  if (source.empty()) throw DomainError("empty source specification");
  source_ = build_canonical(source);
}

Rational GaussianEnsemble::mean(std::size_t i, std::size_t j) const {
  return -source_(i, j) / (2 * gamma_);
}

SkewMatrix<double> sample(const GaussianEnsemble& ens, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double sigma = std::sqrt(ens.variance().get_d());
  SkewMatrix<double> out(ens.dim());
  for (std::size_t i = 0; i < ens.dim(); ++i) {
    for (std::size_t j = i + 1; j < ens.dim(); ++j) {
      out.set(i, j, ens.mean(i, j).get_d() + sigma * normal(rng));
    }
  }
  return out;
}

SkewMatrix<double> sample(const GaussianEnsemble& ens, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample(ens, rng);
}

EnsembleSampler::EnsembleSampler(const GaussianEnsemble& ens)
    : dim_(ens.dim()),
      mean_(Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim_), static_cast<Eigen::Index>(dim_))),
      sigma_(std::sqrt(ens.variance().get_d())) {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      mean_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = ens.mean(i, j).get_d();
    }
  }
}

void EnsembleSampler::draw(std::mt19937_64& rng, Eigen::MatrixXd& out) {
  out = mean_;
  const auto d = static_cast<Eigen::Index>(dim_);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = i + 1; j < d; ++j) {
      const double z = sigma_ * normal_(rng);
      out(i, j) += z;
      out(j, i) -= z;
    }
  }
}

namespace {

class PairingSum {
 public:
  PairingSum(const GaussianEnsemble& ens, const Monomial& m) : ens_(ens), m_(m) {
    means_.reserve(m.size());
    for (const auto& e : m) means_.push_back(ens.mean(e.i, e.j));
    var_ = ens.variance();
  }

  Rational run() { return eval((std::uint64_t{1} << m_.size()) - 1); }

 private:
  Rational covariance(const EntryIndex& a, const EntryIndex& b) const {
    int c = 0;
    if (a.i == b.i && a.j == b.j) ++c;
    if (a.i == b.j && a.j == b.i) --c;
    return c == 0 ? Rational(0) : Rational(c * var_);
  }

  Rational eval(std::uint64_t mask) {
    if (mask == 0) return Rational(1);
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    const int f = std::countr_zero(mask);
    const std::uint64_t rest = mask & ~(std::uint64_t{1} << f);
    Rational total(0);
    if (means_[f] != 0) total += means_[f] * eval(rest);
    for (std::uint64_t r = rest; r != 0; r &= r - 1) {
      const int g = std::countr_zero(r);
      Rational c = covariance(m_[f], m_[g]);
      if (c == 0) continue;
      total += c * eval(rest & ~(std::uint64_t{1} << g));
    }
    memo_.emplace(mask, total);
    return total;
  }

  const GaussianEnsemble& ens_;
  const Monomial& m_;
  std::vector<Rational> means_;
  Rational var_;
  std::unordered_map<std::uint64_t, Rational> memo_;
};

void check_indices(const GaussianEnsemble& ens, const Monomial& m) {
  for (const auto& e : m) {
    if (e.i >= ens.dim() || e.j >= ens.dim()) throw DomainError("matrix entry index out of range");
  }
}

// Canonical upper-triangle code of an entry; returns false for diagonal ones.
bool entry_code(std::size_t dim, std::size_t i, std::size_t j, std::uint32_t& code, int& sign) {
  if (i == j) return false;
  sign = i < j ? 1 : -1;
  code = static_cast<std::uint32_t>(std::min(i, j) * dim + std::max(i, j));
  return true;
}

// A sorted list of upper-triangle codes. Returns false when a centered entry
// occurs an odd number of times, in which case the expectation vanishes.
bool survives_parity(const GaussianEnsemble& ens, const std::vector<std::uint32_t>& sorted_codes) {
  const std::size_t d = ens.dim();
  for (std::size_t a = 0; a < sorted_codes.size();) {
    std::size_t b = a;
    while (b < sorted_codes.size() && sorted_codes[b] == sorted_codes[a]) ++b;
    if ((b - a) % 2 == 1 && ens.mean(sorted_codes[a] / d, sorted_codes[a] % d) == 0) return false;
    a = b;
  }
  return true;
}

Monomial monomial_from_codes(std::size_t dim, const std::vector<std::uint32_t>& codes) {
  Monomial m;
  m.reserve(codes.size());
  for (auto c : codes) m.push_back({c / dim, c % dim});
  return m;
}

}  // namespace

Rational wick_moment(const GaussianEnsemble& ens, const Monomial& monomial) {
  check_indices(ens, monomial);
  if (monomial.size() > 40) throw GuardError("monomial degree too large for pairing enumeration");
  for (const auto& e : monomial) {
    if (e.i == e.j) return Rational(0);
  }
  if (!ens.has_source() && monomial.size() % 2 == 1) return Rational(0);
  PairingSum sum(ens, monomial);
  return sum.run();
}

Rational trace_moment(const GaussianEnsemble& ens, const std::vector<int>& powers) {
  const std::size_t d = ens.dim();
  std::size_t degree = 0;
  Rational scale(1);
  std::vector<int> cycles;
  for (int p : powers) {
    if (p < 0) throw DomainError("negative trace power");
    if (p == 0) {
      scale *= static_cast<unsigned long>(d);  // tr X^0 = d
      continue;
    }
    cycles.push_back(p);
    degree += static_cast<std::size_t>(p);
  }
  if (degree > 16) throw GuardError("trace moment degree above 16");
  if (!ens.has_source() && degree % 2 == 1) return Rational(0);

  // Flattened cycle structure: slot s links index position s to next_pos[s].
  std::vector<std::size_t> next_pos(degree);
  {
    std::size_t base = 0;
    for (int p : cycles) {
      for (int t = 0; t < p; ++t) next_pos[base + t] = base + (t + 1) % p;
      base += static_cast<std::size_t>(p);
    }
  }

  std::map<std::vector<std::uint32_t>, Rational> cache;
  std::vector<std::size_t> idx(degree, 0);
  Rational total(0);

  auto evaluate = [&]() {
    std::vector<std::uint32_t> codes(degree);
    int sign = 1;
    for (std::size_t s = 0; s < degree; ++s) {
      int sg = 1;
      if (!entry_code(d, idx[s], idx[next_pos[s]], codes[s], sg)) return;
      sign *= sg;
    }
    std::sort(codes.begin(), codes.end());
    if (!survives_parity(ens, codes)) return;
    auto it = cache.find(codes);
    if (it == cache.end()) it = cache.emplace(codes, wick_moment(ens, monomial_from_codes(d, codes))).first;
    if (sign > 0) {
      total += it->second;
    } else {
      total -= it->second;
    }
  };

  // Depth-first assignment of the index at every position, skipping any
  // choice that makes an entry diagonal.
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == degree) {
      evaluate();
      return;
    }
    for (std::size_t v = 0; v < d; ++v) {
      bool ok = true;
      for (std::size_t q = 0; q < pos; ++q) {
        if ((next_pos[q] == pos || next_pos[pos] == q) && idx[q] == v) {
          ok = false;
          break;
        }
      }
      if (next_pos[pos] == pos) ok = false;
      if (!ok) continue;
      idx[pos] = v;
      self(self, pos + 1);
    }
  };
  if (degree == 0) return scale;
  rec(rec, 0);
  return scale * total;
}

Rational char_poly_avg_exact(const GaussianEnsemble& ens, const SourceSpec& lambdas) {
  const std::size_t d = ens.dim();
  if (lambdas.empty()) throw DomainError("no spectral parameters");
  if (d > 8 || lambdas.size() > 2) throw GuardError("too large for exact oracle (dim <= 8, k <= 2)");

  using Poly = std::map<std::vector<std::uint32_t>, Rational>;
  auto det_poly = [&](const Rational& lambda) {
    Poly poly;
    std::vector<std::size_t> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      int sign = 1;
      std::vector<bool> seen(d, false);
      for (std::size_t i = 0; i < d; ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = perm[j]) {
          seen[j] = true;
          ++len;
        }
        if (len % 2 == 0) sign = -sign;
      }
      Rational coef(sign);
      std::vector<std::uint32_t> key;
      for (std::size_t i = 0; i < d && coef != 0; ++i) {
        if (perm[i] == i) {
          coef *= lambda;
        } else {
          std::uint32_t code = 0;
          int sg = 1;
          entry_code(d, i, perm[i], code, sg);
          key.push_back(code);
          coef *= -sg;  // entry of lambda I - X is -X_{i, perm(i)}
        }
      }
      if (coef == 0) continue;
      std::sort(key.begin(), key.end());
      poly[key] += coef;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return poly;
  };

  Poly acc{{{}, Rational(1)}};
  for (const auto& lambda : lambdas.values) {
    Poly factor = det_poly(lambda);
    Poly next;
    for (const auto& [ka, ca] : acc) {
      if (ca == 0) continue;
      for (const auto& [kb, cb] : factor) {
        if (cb == 0) continue;
        std::vector<std::uint32_t> key;
        key.reserve(ka.size() + kb.size());
        std::merge(ka.begin(), ka.end(), kb.begin(), kb.end(), std::back_inserter(key));
        next[key] += ca * cb;
      }
    }
    acc = std::move(next);
  }

  Rational total(0);
  for (const auto& [key, c] : acc) {
    if (c == 0 || !survives_parity(ens, key)) continue;
    total += c * wick_moment(ens, monomial_from_codes(d, key));
  }
  return total;
}

}  // namespace skewtop
