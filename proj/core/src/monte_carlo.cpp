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

#include "skewtop/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "skewtop/error.hpp"

namespace skewtop {

bool McEstimate::inconclusive() const {
  if (!std::isfinite(mean) || !std::isfinite(stderr_)) return true;
  if (mean == 0.0) return stderr_ > 0.0;
  return stderr_ / std::fabs(mean) > 0.5;
}

std::mt19937_64 worker_stream(std::uint64_t seed, unsigned worker) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(worker)};
  return std::mt19937_64(seq);
}

namespace {

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

McEstimate median_of_means(const std::vector<double>& block_means, std::uint64_t samples) {
  if (block_means.empty()) throw DomainError("median of means over zero blocks");
  McEstimate est;
  est.samples = samples;
  est.mean = median(block_means);
  std::vector<double> dev;
  dev.reserve(block_means.size());
  for (double b : block_means) dev.push_back(std::fabs(b - est.mean));
  const double mad = median(dev);
  est.stderr_ = 1.2533 * 1.4826 * mad / std::sqrt(static_cast<double>(block_means.size()));
  return est;
}

McEstimate mean_of_blocks(const std::vector<double>& block_means, std::uint64_t samples) {
  if (block_means.size() < 2) throw DomainError("mean of blocks needs at least two blocks");
  McEstimate est;
  est.samples = samples;
  double sum = 0.0;
  for (double b : block_means) sum += b;
  const double n = static_cast<double>(block_means.size());
  est.mean = sum / n;
  double ss = 0.0;
  for (double b : block_means) ss += (b - est.mean) * (b - est.mean);
  est.stderr_ = std::sqrt(ss / (n - 1) / n);
  return est;
}

std::vector<std::vector<double>> run_blocks(const McConfig& cfg, std::size_t observables,
                                            const SamplerFactory& factory) {
  if (cfg.samples < cfg.blocks || cfg.blocks == 0) throw DomainError("fewer samples than blocks");
  const unsigned workers = std::max(1u, cfg.workers);
  const std::uint64_t n = cfg.samples;
  const unsigned nb = cfg.blocks;

  // partial[w][b * observables + o]
  std::vector<std::vector<double>> partial(workers, std::vector<double>(nb * observables, 0.0));
  std::vector<std::uint64_t> block_size(nb, 0);
  for (std::uint64_t t = 0; t < n; ++t) ++block_size[t * nb / n];

  auto job = [&](unsigned w) {
    const std::uint64_t lo = n * w / workers;
    const std::uint64_t hi = n * (w + 1) / workers;
    auto rng = worker_stream(cfg.seed, w);
    Sampler draw = factory();
    std::vector<double> out(observables, 0.0);
    auto& acc = partial[w];
    for (std::uint64_t t = lo; t < hi; ++t) {
      draw(rng, out);
      const std::size_t b = static_cast<std::size_t>(t * nb / n);
      for (std::size_t o = 0; o < observables; ++o) acc[b * observables + o] += out[o];
    }
  };

  if (workers == 1) {
    job(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(job, w);
    for (auto& th : pool) th.join();
  }

  std::vector<std::vector<double>> means(observables, std::vector<double>(nb, 0.0));
  for (unsigned w = 0; w < workers; ++w) {
    for (unsigned b = 0; b < nb; ++b) {
      for (std::size_t o = 0; o < observables; ++o) means[o][b] += partial[w][b * observables + o];
    }
  }
  for (std::size_t o = 0; o < observables; ++o) {
    for (unsigned b = 0; b < nb; ++b) means[o][b] /= static_cast<double>(block_size[b]);
  }
  return means;
}

std::vector<McEstimate> run_monte_carlo(const McConfig& cfg, std::size_t observables,
                                        const SamplerFactory& factory, bool robust) {
  auto blocks = run_blocks(cfg, observables, factory);
  std::vector<McEstimate> out;
  out.reserve(observables);
  for (const auto& b : blocks) {
    out.push_back(robust ? median_of_means(b, cfg.samples) : mean_of_blocks(b, cfg.samples));
  }
  return out;
}

}  // namespace skewtop
