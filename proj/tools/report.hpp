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

#ifndef SKEWTOP_TOOLS_REPORT_HPP
#define SKEWTOP_TOOLS_REPORT_HPP

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "skewtop/duality.hpp"
#include "skewtop/multi_series.hpp"
#include "skewtop/rational.hpp"

namespace skewtop::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "skewtop/1";

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitInconclusive = 2, kExitUsage = 64 };

struct Check {
  std::string name;
  Verdict status = Verdict::fail;
  std::string detail;
};

/// Output of one subcommand. `table` is the human rendering of `results`.
struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  std::vector<std::string> table_header;
  std::vector<std::vector<std::string>> table_rows;
  std::vector<Check> checks;
  std::vector<std::string> conventions;
  double seconds = 0.0;

  void add_check(std::string name, bool ok, std::string detail = {});
  void add_check(std::string name, Verdict v, std::string detail = {});
  /// fail if any check failed, else inconclusive if any was, else pass.
  Verdict status() const;
  int exit_code() const;

  Json to_json(bool with_timing = true) const;
  void render_table(std::ostream& os) const;
};

std::string rat(const Rational& q);
/// Terms of a series as [{"exponents": [...], "coefficient": "p/q"}].
Json series_json(const MultiSeries& s);
/// Coefficients of s^0..s^order of a one-variable series as strings.
Json coefficient_list(const MultiSeries& s);
std::string series_string(const MultiSeries& s, const std::vector<std::string>& names);

}  // namespace skewtop::cli

#endif  // SKEWTOP_TOOLS_REPORT_HPP
