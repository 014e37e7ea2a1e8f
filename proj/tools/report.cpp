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

#include "report.hpp"

#include <algorithm>
#include <iomanip>

namespace skewtop::cli {

void Report::add_check(std::string name, bool ok, std::string detail) {
  add_check(std::move(name), ok ? Verdict::pass : Verdict::fail, std::move(detail));
}

void Report::add_check(std::string name, Verdict v, std::string detail) {
  checks.push_back({std::move(name), v, std::move(detail)});
}

Verdict Report::status() const {
  bool inconclusive = false;
  for (const auto& c : checks) {
    if (c.status == Verdict::fail) return Verdict::fail;
    if (c.status == Verdict::inconclusive) inconclusive = true;
  }
  return inconclusive ? Verdict::inconclusive : Verdict::pass;
}

int Report::exit_code() const {
  switch (status()) {
    case Verdict::pass:
      return kExitPass;
    case Verdict::inconclusive:
      return kExitInconclusive;
    case Verdict::fail:
      break;
  }
  return kExitFail;
}

Json Report::to_json(bool with_timing) const {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  j["status"] = to_string(status());
  j["inputs"] = inputs;
  j["results"] = results;
  Json cs = Json::array();
  for (const auto& c : checks) {
    Json e;
    e["name"] = c.name;
    e["status"] = to_string(c.status);
    if (!c.detail.empty()) e["detail"] = c.detail;
    cs.push_back(e);
  }
  j["checks"] = cs;
  j["conventions"] = conventions;
  if (with_timing) j["timing"] = {{"seconds", seconds}};
  return j;
}

void Report::render_table(std::ostream& os) const {
  os << "skewtop " << command << ": " << to_string(status()) << "\n";
  for (const auto& [key, value] : inputs.items()) {
    os << "  " << key << " = " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
  if (!table_header.empty()) {
    std::vector<std::size_t> width(table_header.size(), 0);
    auto widen = [&](const std::vector<std::string>& row) {
      for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
    };
    widen(table_header);
    for (const auto& r : table_rows) widen(r);
    auto line = [&](const std::vector<std::string>& row) {
      os << " ";
      for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) {
        os << " " << std::left << std::setw(static_cast<int>(width[c])) << row[c];
      }
      os << "\n";
    };
    os << "\n";
    line(table_header);
    std::vector<std::string> rule;
    for (auto w : width) rule.emplace_back(w, '-');
    line(rule);
    for (const auto& r : table_rows) line(r);
  }
  if (!checks.empty()) {
    os << "\nchecks:\n";
    for (const auto& c : checks) {
      os << "  [" << to_string(c.status) << "] " << c.name;
      if (!c.detail.empty()) os << ": " << c.detail;
      os << "\n";
    }
  }
  if (!conventions.empty()) {
    os << "\nconventions:\n";
    for (const auto& c : conventions) os << "  - " << c << "\n";
  }
  os << "\ntime: " << std::fixed << std::setprecision(3) << seconds << " s\n";
  os.unsetf(std::ios::fixed);
}

std::string rat(const Rational& q) { return to_string(q); }

Json series_json(const MultiSeries& s) {
  Json out = Json::array();
  for (const auto& [e, c] : s.terms()) out.push_back({{"exponents", e}, {"coefficient", rat(c)}});
  return out;
}

Json coefficient_list(const MultiSeries& s) {
  Json out = Json::array();
  for (int i = 0; i <= s.order(); ++i) out.push_back(rat(s.coefficient({i})));
  return out;
}

std::string series_string(const MultiSeries& s, const std::vector<std::string>& names) {
  return s.to_string(names);
}

}  // namespace skewtop::cli
