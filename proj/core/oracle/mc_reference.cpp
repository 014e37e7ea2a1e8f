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

#include <algorithm>
#include <cmath>
#include <random>

#include "skewtop/oracle/oracle.hpp"

namespace skewtop::oracle {

OracleResult mc_reference(const MatrixObservable& observable, const GaussianEnsemble& ens,
                          std::uint64_t samples, std::uint64_t seed) {
  constexpr std::uint64_t kBlocks = 16;
  if (samples < kBlocks) throw DomainError("mc_reference needs at least 16 samples");
  const std::size_t d = ens.dim();
  Eigen::MatrixXd mean = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) mean(i, j) = to_double(ens.mean(i, j));
  }
  const double sigma = std::sqrt(to_double(ens.variance()));

  std::mt19937_64 rng(seed);
  Eigen::MatrixXd x(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  std::vector<double> block_means(kBlocks, 0.0);
  const std::uint64_t per_block = samples / kBlocks;
  bool finite = true;
  for (std::uint64_t b = 0; b < kBlocks; ++b) {
    double acc = 0.0;
    for (std::uint64_t t = 0; t < per_block; ++t) {
      x.setZero();
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
          std::normal_distribution<double> entry(mean(i, j), sigma);
          x(i, j) = entry(rng);
          x(j, i) = -x(i, j);
        }
      }
      acc += observable(x);
    }
    block_means[b] = acc / static_cast<double>(per_block);
    finite = finite && std::isfinite(block_means[b]);
  }

  OracleResult res;
  res.method = Method::mc;
  res.cost = per_block * kBlocks;
  double grand = 0.0;
  for (double m : block_means) grand += m;
  grand /= static_cast<double>(kBlocks);
  double var = 0.0;
  for (double m : block_means) var += (m - grand) * (m - grand);
  var /= static_cast<double>(kBlocks - 1);
  std::vector<double> sorted = block_means;
  std::sort(sorted.begin(), sorted.end());
  res.estimate = 0.5 * (sorted[kBlocks / 2 - 1] + sorted[kBlocks / 2]);
  res.stderr_ = std::sqrt(var / static_cast<double>(kBlocks));
  // Heavy tails show up as a median far from the mean of the blocks.
  res.inconclusive = !finite || std::abs(res.estimate - grand) > 3.0 * res.stderr_ + 1e-300;
  return res;
}

}  // namespace skewtop::oracle
