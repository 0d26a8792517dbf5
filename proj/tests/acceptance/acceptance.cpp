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

// Acceptance run: one line per criterion, [PASS] or [FAIL], exit status 0
// only if every criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "halfinfo/cli.hpp"
#include "halfinfo/fiftyrule.hpp"
#include "halfinfo/histories.hpp"
#include "halfinfo/reference_states.hpp"
#include "halfinfo/runner.hpp"
#include "support/naive_minimax.hpp"

namespace {

using namespace halfinfo;
namespace ref = halfinfo::reference;

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::string num(double x) {
  std::ostringstream s;
  s.precision(6);
  s << x;
  return s.str();
}

std::vector<HalfTable> good_halves(const ProblemFamily& f) {
  std::vector<HalfTable> out;
  for (std::size_t t = 0; t < f.size(); ++t) {
    for (auto& h : enumerate_good_half_tables(f, t)) out.push_back(h);
  }
  return out;
}

int min_count(const QueryReport& q) {
  int m = 1 << 30;
  for (const auto& e : q.breakdown) m = std::min(m, e.count);
  return m;
}

int max_count(const QueryReport& q) {
  int m = 0;
  for (const auto& e : q.breakdown) m = std::max(m, e.count);
  return m;
}

Verdict search_counts() {
  Verdict v;
  const QueryReport q = verify_fifty_rule(build_family("grover", 2));
  v.require(q.quantum == 1, "quantum " + std::to_string(q.quantum));
  v.require(q.classical == 3, "classical " + std::to_string(q.classical));
  v.require(min_count(q) == 1 && max_count(q) == 1, "with-info range " + std::to_string(min_count(q)) + ".." +
                                                        std::to_string(max_count(q)));
  v.detail = v.pass ? "quantum 1, classical 3, every good half table 1" : v.detail;
  return v;
}

Verdict search_states() {
  Verdict v;
  const ProblemFamily g = build_family("grover", 2);
  RunOptions o;
  o.bob_choice = BitString::parse("00");
  const AlgorithmTrace t = run_grover(2, o);
  const PhaseTaggedState& output = t.relative_at(Stage::AfterUA);
  const BinaryObservable a0 = qubit_observable(g.layout(), Register::A, 0, "A0");
  RunOptions late;
  late.order = MeasurementOrder::BobLast;
  const AlgorithmTrace t2 = run_grover(2, late);
  const std::vector<std::pair<std::string, double>> d{
      {"initial", density_distance(t.relative_at(Stage::Initial), ref::search_initial_state())},
      {"after oracle", density_distance(t.relative_at(Stage::AfterOracle), ref::search_after_oracle())},
      {"output", density_distance(output, ref::search_output())},
      {"eigenstate", density_distance(t.relative_at(Stage::AfterAliceMeasure), ref::search_solution_eigenstate())},
      {"half projected", density_distance(project(output, a0.zero).state, ref::search_half_projected_output())},
      {"back evolved",
       density_distance(back_evolved_knowledge(g, a0.zero, algorithm_unitary(g, default_schedule(g))).state,
                        ref::search_back_evolved_half())},
      {"correlated", frobenius_distance(reduced_density(t2.at(Stage::AfterUA), Register::B | Register::A),
                                        reduced_density(ref::bare_correlated_state(), Register::B | Register::A))},
  };
  double worst = 0.0;
  for (const auto& [name, dist] : d) {
    v.require(dist <= 1e-10, name + " off by " + num(dist));
    worst = std::max(worst, dist);
  }
  if (v.pass) v.detail = "7 states, max Frobenius distance " + num(worst);
  return v;
}

Verdict entropy_accounting() {
  Verdict v;
  const ProblemFamily g = build_family("grover", 2);
  const Operator u = algorithm_unitary(g, default_schedule(g));
  const double initial = b_entropy(prepare_initial(g));
  v.require(std::abs(initial - 2.0) <= 1e-9, "initial " + num(initial));
  int halves = 0;
  for (const auto& h : halved_projection_set(g.layout())) {
    const double after = back_evolved_knowledge(g, h.projector, u).entropy_after;
    v.require(std::abs(after - 1.0) <= 1e-9, h.projector.description() + " gives " + num(after));
    ++halves;
  }
  v.require(halves == 6, std::to_string(halves) + " halved projections");
  const double solved = back_evolved_knowledge(g, Projector::onto_basis(Register::A, {0}, "a=00"), u).entropy_after;
  v.require(std::abs(solved) <= 1e-9, "solution " + num(solved));
  if (v.pass) v.detail = "2 bits, 1 bit after each of 6 halves, 0 after the solution";
  return v;
}

Verdict deferred() {
  Verdict v;
  const ProblemFamily g = build_family("grover", 2);
  const DeferredReport r = deferred_equivalence(g, default_schedule(g), 64, 1);
  const DeferredReport s = deferred_equivalence(g, default_schedule(g), 64, 1,
                                                std::make_pair(BitString::parse("00"), BitString::parse("01")));
  v.require(r.max_difference <= 1e-12, "difference " + num(r.max_difference));
  v.require(s.max_difference <= 1e-12, "difference with U_B " + num(s.max_difference));
  if (v.pass) v.detail = "max difference " + num(std::max(r.max_difference, s.max_difference));
  return v;
}

Verdict deutsch_jozsa() {
  Verdict v;
  const ProblemFamily d = build_family("dj", 2);
  std::vector<std::string> listed;
  for (const auto& t : d.tables()) listed.push_back(t.index.str());
  v.require(listed == std::vector<std::string>{"0000", "1111", "0011", "1100", "0101", "1010", "0110", "1001"},
            "table order");
  for (const auto& t : d.tables()) {
    RunOptions o;
    o.bob_choice = t.index;
    const AlgorithmTrace tr = run_dj(2, o);
    v.require(tr.success && std::abs(tr.success_probability - 1.0) <= 1e-12, "misclassified " + t.index.str());
  }
  const QueryReport q = verify_fifty_rule(d);
  v.require(q.quantum == 1 && q.classical == 3 && q.classical_with_info == 1, "counts");
  for (std::size_t t = 0; t < d.size(); ++t) {
    if (d.solution(t) == "balanced") {
      v.require(enumerate_good_half_tables(d, t).size() == 2, "half tables of " + d.table(t).index.str());
    }
  }
  v.require(check_dual_projection_no_info(d, BitString::parse("0000"), BitString::parse("1111")), "dual 0000/1111");
  v.require(check_dual_projection_no_info(d, BitString::parse("0011"), BitString::parse("1100")), "dual 0011/1100");
  if (v.pass) v.detail = "8 tables, all classified, counts (1,3,1), 2 halves per balanced table, duals pass";
  return v;
}

Verdict simon() {
  Verdict v;
  const ProblemFamily s = build_family("simon", 2);
  for (std::size_t t = 0; t < s.size(); ++t) {
    RunOptions o;
    o.bob_choice = s.table(t).index;
    o.seed = t;
    const SimonRun run = run_simon(s, o);
    const std::uint64_t h = *simon_period(s.table(t), 2);
    for (const auto& str : run.strings) v.require(dot_mod2(str.bits, h) == 0, "s not orthogonal");
    v.require(run.h && run.h->bits == h, "period of " + s.table(t).index.str());
  }
  const QueryReport q = verify_fifty_rule(s);
  v.require(q.quantum_exact, "measured strings");
  v.require(min_count(q) == 1 && max_count(q) == 1, "with-info counts");
  if (v.pass) v.detail = "6 periods recovered, every good half table 1";
  return v;
}

Verdict permutation() {
  Verdict v;
  const ProblemFamily p = build_family("perm", 2);
  const std::vector<int> classes = partition_of(p);
  for (int c = 1; c <= 3; ++c) {
    v.require(std::count(classes.begin(), classes.end(), c) == 8, "class " + std::to_string(c));
  }
  double zero = 0.0;
  for (const auto& dist : single_query_outcomes(p)) {
    if (const auto it = dist.find(0); it != dist.end()) zero = std::max(zero, it->second);
  }
  v.require(zero <= 1e-12, "P(A=00) " + num(zero));
  const QueryReport q = verify_fifty_rule(p);
  v.require(q.quantum == 1 && q.classical == 3 && q.classical_with_info == 1, "counts");
  if (v.pass) v.detail = "classes 8/8/8, P(A=00) = " + num(zero) + ", counts (1,3,1)";
  return v;
}

Verdict histories() {
  Verdict v;
  const ProblemFamily g = build_family("grover", 2);
  for (const auto& half : good_halves(g)) {
    const std::size_t count = collect_histories(g, {half}).histories.size();
    v.require(count == 8, describe(g, half) + " gives " + std::to_string(count));
  }
  double worst = 0.0;
  for (const char* name : {"grover", "dj", "simon"}) {
    const ProblemFamily f = build_family(name, 2);
    for (const auto& half : good_halves(f)) worst = std::max(worst, span_reconstruction(f, half).residual);
  }
  v.require(worst < 1e-10, "residual " + num(worst));
  if (v.pass) v.detail = "8 histories per half table, max residual " + num(worst);
  return v;
}

Verdict iterated_search() {
  Verdict v;
  double worst = 0.0;
  for (int n : {3, 4}) {
    const double theta = std::asin(std::pow(2.0, -0.5 * n));
    const auto curve = grover_success_curve(n, 8);
    for (int k = 1; k <= 8; ++k) {
      const double s = std::sin((2 * k + 1) * theta);
      worst = std::max(worst, std::abs(curve[k - 1] - s * s));
    }
    const int k = default_grover_iterations(n);
    v.require(curve[k - 1] >= 1.0 - std::pow(2.0, -n), "n=" + std::to_string(n) + " at k=" + std::to_string(k));
  }
  v.require(worst <= 1e-9, "closed form off by " + num(worst));
  if (v.pass) v.detail = "max closed-form error " + num(worst);
  return v;
}

Verdict synthesis() {
  Verdict v;
  const ObjectiveComparison c = compare_objectives(build_family("grover", 2), 32, 1);
  v.require(c.readable_info.value >= 2.0 - 1e-6, "reached " + num(c.readable_info.value));
  v.require(!c.maximizers_differ, "maximizers differ");
  if (v.pass) v.detail = "readable info " + num(c.readable_info.value) + ", shared maximizer";
  return v;
}

Verdict oracle_equivalence() {
  Verdict v;
  int families = 0;
  for (auto [name, n] : {std::pair{"grover", 2}, std::pair{"grover", 3}, std::pair{"dj", 2}, std::pair{"simon", 2}}) {
    const ProblemFamily f = build_family(name, n);
    std::vector<std::size_t> all(f.size());
    for (std::size_t t = 0; t < all.size(); ++t) all[t] = t;
    MinimaxSolver solver(f);
    v.require(solver.solve(all) == testing::naive_minimax(f, all, testing::all_arguments(f)), f.label());
    ++families;
  }

  const auto dir = std::filesystem::temp_directory_path() / "halfinfo_acceptance";
  std::filesystem::create_directories(dir);
  const std::string file = (dir / "perm.json").string();
  auto run = [](std::vector<std::string> args, std::string& text) {
    args.insert(args.begin(), "halfinfo");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    text = out.str();
    return code;
  };
  std::string ignored, from_file, built_in;
  v.require(run({"export", "--family", "perm", "--out", file}, ignored) == 0, "export");
  v.require(run({"family", "--file", file}, from_file) == 0, "family --file");
  v.require(run({"family", "--builtin", "perm"}, built_in) == 0, "family --builtin");
  v.require(!from_file.empty() && from_file == built_in, "perm reports differ");
  std::filesystem::remove_all(dir);
  if (v.pass) v.detail = std::to_string(families) + " families agree; perm report identical (" +
                         std::to_string(from_file.size()) + " bytes)";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"AC1 search n=2 query counts", search_counts},
      {"AC2 state reproduction", search_states},
      {"AC3 entropy accounting", entropy_accounting},
      {"AC4 deferred measurement", deferred},
      {"AC5 Deutsch-Jozsa", deutsch_jozsa},
      {"AC6 Simon n=2", simon},
      {"AC7 permutation family", permutation},
      {"AC8 computation histories", histories},
      {"AC9 iterated search", iterated_search},
      {"AC10 U_A synthesis", synthesis},
      {"AC11 minimax oracle and round trip", oracle_equivalence},
  };
  int failed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& [name, check] : criteria) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %s: %s\n", v.pass ? "PASS" : "FAIL", name.c_str(), v.detail.c_str());
    failed += v.pass ? 0 : 1;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%zu criteria passed in %.2f s\n", static_cast<int>(criteria.size()) - failed, criteria.size(),
              seconds);
  return failed == 0 ? 0 : 1;
}
