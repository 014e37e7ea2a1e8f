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

#ifndef SKEWTOP_MONTE_CARLO_HPP
#define SKEWTOP_MONTE_CARLO_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace skewtop {

struct McEstimate {
  double mean = 0.0;
  double stderr_ = 0.0;
  std::uint64_t samples = 0;

  /// Heavy-tail rule: the estimate is not trusted when stderr/|mean| > 0.5.
  bool inconclusive() const;
};

struct McConfig {
  std::uint64_t samples = 100000;
  std::uint64_t seed = 42;
  unsigned workers = 1;
  unsigned blocks = 16;
};

/// Generator for worker `worker` of a run seeded with `seed`.
std::mt19937_64 worker_stream(std::uint64_t seed, unsigned worker);

/// Median of the block means with the robust spread
/// 1.2533 * 1.4826 * MAD / sqrt(blocks) as standard error.
McEstimate median_of_means(const std::vector<double>& block_means, std::uint64_t samples);

/// Plain mean and standard error of the block means, for well-behaved
/// observables where the median would throw away efficiency.
McEstimate mean_of_blocks(const std::vector<double>& block_means, std::uint64_t samples);

/// Fills `out` (already sized to the observable count) for one draw.
using Sampler = std::function<void(std::mt19937_64& rng, std::vector<double>& out)>;
using SamplerFactory = std::function<Sampler()>;

/// Per-observable block means. Sample index t belongs to block
/// t * blocks / samples; worker w handles a contiguous index range with its
/// own stream, and partial block sums are merged in worker order, so the
/// result depends only on (seed, workers).
std::vector<std::vector<double>> run_blocks(const McConfig& cfg, std::size_t observables,
                                            const SamplerFactory& factory);

std::vector<McEstimate> run_monte_carlo(const McConfig& cfg, std::size_t observables,
                                        const SamplerFactory& factory, bool robust = true);

}  // namespace skewtop

#endif  // SKEWTOP_MONTE_CARLO_HPP
