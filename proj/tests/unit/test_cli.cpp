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

#include <gtest/gtest.h>

#include <sstream>

#include "commands.hpp"
#include "skewtop/error.hpp"

namespace skewtop::cli {
namespace {

RunConfig config(const std::string& sub) {
  RunConfig cfg;
  cfg.subcommand = sub;
  cfg.threads = 1;
  return cfg;
}

bool has_row_value(const Report& r, const std::string& value) {
  for (const auto& row : r.table_rows) {
    for (const auto& cell : row) {
      if (cell == value) return true;
    }
  }
  return false;
}

TEST(Cli, ParseCount) {
  EXPECT_EQ(parse_count("100000"), 100000u);
  EXPECT_EQ(parse_count("1e6"), 1000000u);
  EXPECT_EQ(parse_count("2.5e5"), 250000u);
  EXPECT_THROW(parse_count("1.5"), UsageError);
  EXPECT_THROW(parse_count("0"), UsageError);
  EXPECT_THROW(parse_count("ten"), UsageError);
}

TEST(Cli, Defaults) {
  const RunConfig cfg;
  EXPECT_EQ(cfg.order, 8);
  EXPECT_EQ(cfg.k, 4);
  EXPECT_EQ(cfg.samples, 100000u);
  EXPECT_EQ(cfg.seed, 42u);
  EXPECT_DOUBLE_EQ(cfg.tolerance, 1e-9);
  EXPECT_EQ(cfg.format, "table");
}

TEST(Cli, ExitCodes) {
  Report r;
  EXPECT_EQ(r.exit_code(), kExitPass);
  r.add_check("a", Verdict::inconclusive);
  EXPECT_EQ(r.exit_code(), kExitInconclusive);
  r.add_check("b", false);
  EXPECT_EQ(r.exit_code(), kExitFail);
}

TEST(Cli, DualityExactSmall) {
  RunConfig cfg = config("duality");
  cfg.N = 1;
  cfg.k = 1;
  const Report r = run(cfg);
  EXPECT_EQ(r.exit_code(), kExitPass);
  const Json j = r.to_json();
  EXPECT_EQ(j["schema"], "skewtop/1");
  EXPECT_EQ(j["status"], "pass");
  EXPECT_FALSE(j["conventions"].empty());
  EXPECT_EQ(j["results"]["trials"].size(), 20u);
  EXPECT_TRUE(j["results"]["trials"][0]["lhs"].is_string());
}

TEST(Cli, DualityRejectsEmptySide) {
  RunConfig cfg = config("duality");
  cfg.N = 0;
  EXPECT_THROW(run(cfg), UsageError);
}

TEST(Cli, IdenticalConfigGivesIdenticalJson) {
  RunConfig cfg = config("duality");
  cfg.N = 2;
  cfg.k = 1;
  cfg.duality_mode = "mc";
  cfg.samples = 20000;
  EXPECT_EQ(run(cfg).to_json(false).dump(), run(cfg).to_json(false).dump());
  RunConfig hc = config("hc-check");
  hc.samples = 20000;
  EXPECT_EQ(run(hc).to_json(false).dump(), run(hc).to_json(false).dump());
}

TEST(Cli, IntersectDefaultTable) {
  const Report r = run(config("intersect"));
  EXPECT_EQ(r.exit_code(), kExitPass);
  EXPECT_TRUE(has_row_value(r, "1/24"));
  EXPECT_TRUE(has_row_value(r, "1/6"));
  EXPECT_TRUE(has_row_value(r, "1/864"));
}

TEST(Cli, IntersectTruncated) {
  RunConfig cfg = config("intersect");
  cfg.order = 4;
  const Report r = run(cfg);
  EXPECT_EQ(r.table_rows.size(), 2u);
  EXPECT_FALSE(has_row_value(r, "1/864"));
  cfg.order = 30;
  EXPECT_THROW(run(cfg), UsageError);
}

TEST(Cli, EvolutionReplica) {
  RunConfig cfg = config("evolution");
  cfg.evolution_mode = "replica";
  cfg.order = 6;
  const Report r = run(cfg);
  EXPECT_EQ(r.exit_code(), kExitPass);
  EXPECT_EQ(r.results["coefficients"], Json({"1", "0", "1/4", "0", "1/96", "0", "1/1152"}));
}

TEST(Cli, EvolutionFiniteWithSource) {
  RunConfig cfg = config("evolution");
  cfg.evolution_mode = "finite";
  cfg.source = {"1", "1/2"};
  cfg.order = 6;
  EXPECT_EQ(run(cfg).exit_code(), kExitPass);
  cfg.source = {"0", "1"};
  EXPECT_THROW(run(cfg), DomainError);
}

TEST(Cli, AiryGenusOne) {
  RunConfig cfg = config("airy");
  cfg.genus = "1";
  const Report r = run(cfg);
  EXPECT_EQ(r.exit_code(), kExitPass);
  EXPECT_EQ(r.results["one_point"][0]["value"], "1/24");
  cfg.genus = "3/2";
  EXPECT_EQ(run(cfg).results["one_point"][0]["value"], "1/864");
  cfg.genus = "1/3";
  EXPECT_THROW(run(cfg), UsageError);
}

TEST(Cli, TableRendering) {
  const Report r = run(config("intersect"));
  std::ostringstream os;
  r.render_table(os);
  EXPECT_NE(os.str().find("tau_{2,1}"), std::string::npos);
  EXPECT_NE(os.str().find("conventions:"), std::string::npos);
}

TEST(Cli, UnknownSubcommand) { EXPECT_THROW(run(config("nope")), UsageError); }

}  // namespace
}  // namespace skewtop::cli
