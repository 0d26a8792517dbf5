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

// Verification reports and the command-line driver.

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "halfinfo/json_io.hpp"
#include "halfinfo/problems.hpp"

namespace halfinfo {

struct RunConfig {
  std::string command;          // verify, sweep, family or export
  std::string family = "all";
  int n = 2;
  std::uint64_t seed = 1;
  std::optional<double> tolerance;  // replaces every real-valued tolerance
  std::string format = "json";
  std::string out;              // empty: standard output
  std::string file;             // family --file
  int n_min = 2;
  int n_max = 2;
};

/// Default tolerances, all replaced by RunConfig::tolerance when given.
struct Tolerances {
  double state = 1e-10;        // Frobenius distance between density matrices
  double entropy = 1e-9;
  double probability = 1e-12;
  double closed_form = 1e-9;   // Grover success curve
  double residual = 1e-10;     // history reconstruction
  double synthesis = 1e-6;
  double unitarity = 1e-9;

  static Tolerances from(const RunConfig& config);
};

struct Check {
  std::string name;
  bool pass = false;
  Json measured;
  Json expected;
  std::string relation;  // "==", "<=", ">=" or "~" (within tolerance)
  double tolerance = 0.0;
};

/// Ordered list of checks plus free-form measurements that are reported
/// without a verdict.
class VerificationReport {
 public:
  void exact(const std::string& name, const Json& measured, const Json& expected);
  void near(const std::string& name, double measured, double expected, double tolerance);
  void at_most(const std::string& name, double measured, double bound, double tolerance);
  void at_least(const std::string& name, double measured, double bound, double tolerance);

  /// Appends another report's checks with a name prefix and merges its data
  /// under `key`.
  void absorb(const std::string& prefix, const VerificationReport& other);

  bool pass() const;
  const std::vector<Check>& checks() const { return checks_; }
  Json& data() { return data_; }
  const Json& data() const { return data_; }
  Json& config() { return config_; }
  const Json& config() const { return config_; }

 private:
  std::vector<Check> checks_;
  Json data_ = Json::object();
  Json config_ = Json::object();
};

std::string render_json(const VerificationReport& report);
std::string render_markdown(const VerificationReport& report);

/// Per-family check suites used by `verify`.
VerificationReport verify_family(const std::string& family, int n, std::uint64_t seed, const Tolerances& tol);
/// Single-call outcome distributions and minimax counts for any family.
VerificationReport family_report(const ProblemFamily& family, const Tolerances& tol);
/// Success probability of Grover search against the closed form for
/// k = 1 .. ceil(pi/2 * 2^(n/2)).
VerificationReport sweep_report(int n_min, int n_max, const Tolerances& tol);

/// Commands throw std::invalid_argument on configuration errors.
VerificationReport cmd_verify(const RunConfig& config);
VerificationReport cmd_sweep(const RunConfig& config);
VerificationReport cmd_family(const RunConfig& config);

/// Runs one command and writes its report. Returns 0 when
/// every check passes, 1 on a failed check or internal error, 2 on a usage
/// or configuration error. HALFINFO_OUT_DIR, when set, prefixes relative
/// output paths.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace halfinfo
