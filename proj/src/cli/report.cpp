// Copyright 2026 The halfinfo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <sstream>

#include "halfinfo/cli.hpp"

namespace halfinfo {

Tolerances Tolerances::from(const RunConfig& config) {
  Tolerances tol;
  if (config.tolerance) {
    const double t = *config.tolerance;
    tol = {t, t, t, t, t, t, t};
  }
  return tol;
}

void VerificationReport::exact(const std::string& name, const Json& measured, const Json& expected) {
  checks_.push_back({name, measured == expected, measured, expected, "==", 0.0});
}

void VerificationReport::near(const std::string& name, double measured, double expected, double tolerance) {
  const bool ok = std::isfinite(measured) && std::abs(measured - expected) <= tolerance;
  checks_.push_back({name, ok, measured, expected, "~", tolerance});
}

void VerificationReport::at_most(const std::string& name, double measured, double bound, double tolerance) {
  const bool ok = std::isfinite(measured) && measured <= bound + tolerance;
  checks_.push_back({name, ok, measured, bound, "<=", tolerance});
}

void VerificationReport::at_least(const std::string& name, double measured, double bound, double tolerance) {
  const bool ok = std::isfinite(measured) && measured >= bound - tolerance;
  checks_.push_back({name, ok, measured, bound, ">=", tolerance});
}

void VerificationReport::absorb(const std::string& prefix, const VerificationReport& other) {
  for (Check c : other.checks_) {
    c.name = prefix + "." + c.name;
    checks_.push_back(std::move(c));
  }
  data_[prefix] = other.data_;
}

bool VerificationReport::pass() const {
  for (const auto& c : checks_) {
    if (!c.pass) return false;
  }
  return true;
}

namespace {

Json to_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks()) {
    checks.push_back({{"name", c.name},
                      {"status", c.pass ? "pass" : "fail"},
                      {"measured", c.measured},
                      {"relation", c.relation},
                      {"expected", c.expected},
                      {"tolerance", c.tolerance}});
  }
  return {{"schema", kSchemaVersion},
          {"tool", "halfinfo"},
          {"version", HALFINFO_VERSION},
          {"config", report.config()},
          {"pass", report.pass()},
          {"checks", std::move(checks)},
          {"data", report.data()}};
}

// Scalars print exactly as in the JSON form so both renderings carry the
// same numbers.
std::string scalar(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

void flatten(const Json& value, const std::string& path, std::ostream& out) {
  if (value.is_object()) {
    for (const auto& item : value.items()) flatten(item.value(), path.empty() ? item.key() : path + "." + item.key(), out);
  } else if (value.is_array() && !value.empty()) {
    for (std::size_t i = 0; i < value.size(); ++i) flatten(value[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out << "| " << path << " | " << scalar(value) << " |\n";
  }
}

}  // namespace

std::string render_json(const VerificationReport& report) { return to_json(report).dump(2) + "\n"; }

std::string render_markdown(const VerificationReport& report) {
  std::ostringstream out;
  out << "# halfinfo report\n\n";
  out << "- schema: " << kSchemaVersion << "\n";
  out << "- version: " << HALFINFO_VERSION << "\n";
  out << "- result: " << (report.pass() ? "PASS" : "FAIL") << "\n\n";
  out << "## Config\n\n| key | value |\n|---|---|\n";
  flatten(report.config(), "", out);
  out << "\n## Checks\n\n| check | status | measured | relation | expected | tolerance |\n|---|---|---|---|---|---|\n";
  for (const auto& c : report.checks()) {
    out << "| " << c.name << " | " << (c.pass ? "pass" : "fail") << " | " << scalar(c.measured) << " | " << c.relation
        << " | " << scalar(c.expected) << " | " << Json(c.tolerance).dump() << " |\n";
  }
  if (!report.data().empty()) {
    out << "\n## Data\n\n| key | value |\n|---|---|\n";
    flatten(report.data(), "", out);
  }
  return out.str();
}

}  // namespace halfinfo
