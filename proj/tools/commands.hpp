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

#ifndef SKEWTOP_TOOLS_COMMANDS_HPP
#define SKEWTOP_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "report.hpp"

namespace skewtop::cli {

/// Invalid command-line configuration (exit code 64).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string subcommand;
  int order = 8;
  int k = 4;
  int N = 1;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 42;
  double tolerance = 1e-9;
  std::string format = "table";
  std::string output;
  unsigned threads = 0;  // 0: hardware concurrency

  // duality
  std::string duality_mode = "exact";
  std::size_t trials = 20;
  // hc-check
  int hc_N = 2;
  std::size_t pairs = 5;
  std::string pairing = "calibrated";
  // evolution
  std::string evolution_mode = "replica";
  int n = 1;
  std::vector<std::string> source;
  // airy
  std::string genus;
  std::string max_genus = "3";
};

/// Worker count after applying the --threads cap.
unsigned worker_count(const RunConfig& cfg);

/// Parses sample counts such as "100000", "1e6" or "2.5e5".
std::uint64_t parse_count(const std::string& text);

Report cmd_duality(const RunConfig& cfg);
Report cmd_hc(const RunConfig& cfg);
Report cmd_intersect(const RunConfig& cfg);
Report cmd_evolution(const RunConfig& cfg);
Report cmd_airy(const RunConfig& cfg);
Report cmd_verify(const RunConfig& cfg);

/// Dispatches on cfg.subcommand and fills in the timing field.
Report run(const RunConfig& cfg);

}  // namespace skewtop::cli

#endif  // SKEWTOP_TOOLS_COMMANDS_HPP
