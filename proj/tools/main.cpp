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

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "skewtop/error.hpp"

namespace {

using skewtop::cli::RunConfig;

void add_common(CLI::App* sub, RunConfig& cfg, std::string& samples, std::string& seed) {
  sub->add_option("--samples", samples, "Monte Carlo samples (accepts 1e5 style)")->default_str("100000");
  sub->add_option("--seed", seed, "Random seed (SKEWTOP_SEED overrides)")->default_str("42");
  sub->add_option("--tolerance", cfg.tolerance, "Floating tolerance")->capture_default_str();
  sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"table", "json"}))->capture_default_str();
  sub->add_option("--output,-o", cfg.output, "Also write the JSON report to this path");
  sub->add_option("--threads", cfg.threads, "Cap on worker threads (0: all cores)")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  std::string samples = "100000";
  std::string seed = "42";

  CLI::App app{"skewtop: antisymmetric Gaussian matrix model verifications"};
  app.require_subcommand(1);

  auto* duality = app.add_subcommand("duality", "Check the N <-> k characteristic polynomial duality");
  duality->add_option("--N", cfg.N, "Half size of the source side")->capture_default_str();
  duality->add_option("--k", cfg.k, "Number of characteristic polynomials")->capture_default_str();
  duality->add_option("--mode", cfg.duality_mode, "exact or mc")->capture_default_str();
  duality->add_option("--trials", cfg.trials, "Random draws in exact mode")->capture_default_str();

  auto* hc = app.add_subcommand("hc-check", "Check the orthogonal group integral formula");
  hc->add_option("--N", cfg.hc_N, "Half size of SO(2N)")->capture_default_str();
  hc->add_option("--pairs", cfg.pairs, "Random (y, lambda) pairs")->capture_default_str();
  hc->add_option("--pairing", cfg.pairing, "calibrated or literal")->capture_default_str();

  auto* intersect = app.add_subcommand("intersect", "Intersection numbers from the free energy");
  intersect->add_option("--order", cfg.order, "Truncation order in u")->capture_default_str();
  intersect->add_option("--k", cfg.k, "Number of u variables")->capture_default_str();

  auto* evolution = app.add_subcommand("evolution", "Series of the evolution operator");
  evolution->add_option("--mode", cfg.evolution_mode, "finite, replica or theorem3")->capture_default_str();
  evolution->add_option("--order", cfg.order, "Truncation order in s")->capture_default_str();
  evolution->add_option("--n", cfg.n, "Number of points (theorem3)")->capture_default_str();
  evolution->add_option("--N", cfg.N, "Half size, zero source (finite)")->capture_default_str();
  evolution->add_option("--a", cfg.source, "Source values, comma separated (finite)")->delimiter(',');

  auto* airy = app.add_subcommand("airy", "One-point numbers at the critical source");
  airy->add_option("--genus", cfg.genus, "Single genus, e.g. 3 or 3/2");
  airy->add_option("--max-genus", cfg.max_genus, "Table from g = 1 through this genus")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run the oracle cross-check battery");

  for (auto* sub : {duality, hc, intersect, evolution, airy, verify}) add_common(sub, cfg, samples, seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return skewtop::cli::kExitUsage;
  }

  try {
    cfg.subcommand = app.get_subcommands().front()->get_name();
    if (const char* env = std::getenv("SKEWTOP_SEED"); env != nullptr && *env != '\0') seed = env;
    cfg.samples = skewtop::cli::parse_count(samples);
    if (seed.empty() || seed.find_first_not_of("0123456789") != std::string::npos) {
      throw skewtop::cli::UsageError("seed must be a non-negative integer, got '" + seed + "'");
    }
    cfg.seed = std::stoull(seed);

    const skewtop::cli::Report report = skewtop::cli::run(cfg);
    if (cfg.format == "json") {
      std::cout << report.to_json().dump(2) << "\n";
    } else {
      report.render_table(std::cout);
    }
    if (!cfg.output.empty()) {
      std::ofstream out(cfg.output);
      if (!out) throw skewtop::cli::UsageError("cannot write " + cfg.output);
      out << report.to_json().dump(2) << "\n";
    }
    return report.exit_code();
  } catch (const skewtop::cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
  } catch (const skewtop::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: value out of range\n";
  }
  return skewtop::cli::kExitUsage;
}
