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

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>

#include "CLI11.hpp"

#include "halfinfo/cli.hpp"
#include "halfinfo/fiftyrule.hpp"
#include "halfinfo/histories.hpp"
#include "halfinfo/reference_states.hpp"
#include "halfinfo/runner.hpp"

namespace halfinfo {

namespace {

namespace ref = reference;

constexpr int kGroverMaxN = 11;
constexpr int kSynthesisRestarts = 32;

double closed_form_success(int n, int k) {
  const double theta = std::asin(std::pow(2.0, -0.5 * n));
  const double s = std::sin((2 * k + 1) * theta);
  return s * s;
}

double ba_distance(const PhaseTaggedState& lhs, const PhaseTaggedState& rhs) {
  return frobenius_distance(reduced_density(lhs, Register::B | Register::A),
                            reduced_density(rhs, Register::B | Register::A));
}

Operator hadamard_on_a(const ProblemFamily& family) {
  return Operator::local(family.layout(), hadamard(family.layout().nA()), Register::A, "H_A");
}

PhaseTaggedState after_hadamard(const ProblemFamily& family) {
  return apply(apply(prepare_initial(family), oracle_unitary(family)), hadamard_on_a(family));
}

struct CountRange {
  int min = std::numeric_limits<int>::max();
  int max = std::numeric_limits<int>::min();
  void add(int x) {
    min = std::min(min, x);
    max = std::max(max, x);
  }
};

CountRange half_table_counts(const QueryReport& q) {
  CountRange r;
  for (const auto& entry : q.breakdown) r.add(entry.count);
  return r;
}

void query_checks(VerificationReport& r, const ProblemFamily& family, const QueryReport& q, int quantum,
                  int classical, int with_info) {
  r.exact("queries.quantum", q.quantum, quantum);
  r.exact("queries.quantum_exact", q.quantum_exact, true);
  r.exact("queries.classical", q.classical, classical);
  r.exact("queries.classical_with_info", q.classical_with_info, with_info);
  r.exact("queries.rule_holds", q.rule_holds, true);
  r.data()["queries"] = query_report_to_json(q, family);
}

// Largest span and linearity residuals over every good half table.
void reconstruction_checks(VerificationReport& r, const ProblemFamily& family, const Tolerances& tol) {
  double residual = 0.0;
  double linearity = 0.0;
  int halves = 0;
  for (std::size_t t = 0; t < family.size(); ++t) {
    for (const auto& half : enumerate_good_half_tables(family, t)) {
      const Reconstruction rec = span_reconstruction(family, half);
      residual = std::max(residual, rec.residual);
      linearity = std::max(linearity, rec.linearity_residual);
      ++halves;
    }
  }
  r.at_most("histories.span_residual_max", residual, 0.0, tol.residual);
  r.at_most("histories.linearity_residual_max", linearity, 0.0, tol.residual);
  r.data()["histories"]["good_half_tables"] = halves;
}

VerificationReport grover_pair(std::uint64_t seed, const Tolerances& tol) {
  const ProblemFamily family = build_family(FamilyKind::Grover, 2);
  VerificationReport r;

  const QueryReport q = verify_fifty_rule(family);
  query_checks(r, family, q, 1, 3, 1);
  const CountRange per_half = half_table_counts(q);
  r.exact("queries.every_half_table.min", per_half.min, 1);
  r.exact("queries.every_half_table.max", per_half.max, 1);

  // Alice's view of a run where Bob picked 00.
  RunOptions first;
  first.bob_choice = BitString::parse("00");
  first.seed = seed;
  const AlgorithmTrace trace = run_grover(2, first);
  const PhaseTaggedState& output = trace.relative_at(Stage::AfterUA);
  r.at_most("state.initial", density_distance(trace.relative_at(Stage::Initial), ref::search_initial_state()), 0.0,
            tol.state);
  r.at_most("state.after_oracle",
            density_distance(trace.relative_at(Stage::AfterOracle), ref::search_after_oracle()), 0.0, tol.state);
  r.at_most("state.output", density_distance(output, ref::search_output()), 0.0, tol.state);
  r.at_most("state.solution_eigenstate",
            density_distance(trace.relative_at(Stage::AfterAliceMeasure), ref::search_solution_eigenstate()), 0.0,
            tol.state);

  const BinaryObservable a0 = qubit_observable(family.layout(), Register::A, 0, "A0");
  const Projection half_output = project(output, a0.zero);
  r.at_most("state.half_projected_output", density_distance(half_output.state, ref::search_half_projected_output()),
            0.0, tol.state);
  r.near("probability.half_projected_output", half_output.probability, 0.5, tol.probability);

  const Operator u = algorithm_unitary(family, default_schedule(family));
  const KnowledgeGain back = back_evolved_knowledge(family, a0.zero, u);
  r.at_most("state.back_evolved_half", density_distance(back.state, ref::search_back_evolved_half()), 0.0, tol.state);

  RunOptions last;
  last.order = MeasurementOrder::BobLast;
  last.seed = seed;
  const AlgorithmTrace late = run_grover(2, last);
  r.at_most("state.correlated_before_measurement", ba_distance(late.at(Stage::AfterUA), ref::bare_correlated_state()),
            0.0, tol.state);

  const auto halves = halved_projection_set(family.layout());
  const Projection left = project(project(output, halves[0].projector).state, halves[1].projector);
  r.at_most("state.two_halves_compose_to_solution",
            density_distance(left.state, ref::search_solution_eigenstate()), 0.0, tol.state);

  double worst = 1.0;
  for (std::size_t t = 0; t < family.size(); ++t) {
    RunOptions o;
    o.bob_choice = family.table(t).index;
    o.seed = seed + t;
    worst = std::min(worst, run_grover(2, o).success_probability);
  }
  r.near("probability.success_min", worst, 1.0, tol.probability);

  // Entropy of B before and after each back-evolved projection.
  r.near("entropy.initial", b_entropy(prepare_initial(family)), 2.0, tol.entropy);
  for (const auto& h : halves) {
    const KnowledgeGain gain = back_evolved_knowledge(family, h.projector, u);
    r.near("entropy.half[" + h.projector.description() + "]", gain.entropy_after, 1.0, tol.entropy);
  }
  const Projector solution = Projector::onto_basis(Register::A, {0}, "a=00");
  r.near("entropy.solution", back_evolved_knowledge(family, solution, u).entropy_after, 0.0, tol.entropy);

  const Schedule schedule = default_schedule(family);
  const DeferredReport plain = deferred_equivalence(family, schedule, 32, seed);
  const DeferredReport swapped = deferred_equivalence(
      family, schedule, 32, seed, std::make_pair(BitString::parse("00"), BitString::parse("01")));
  r.at_most("deferred.max_difference", plain.max_difference, 0.0, tol.probability);
  r.at_most("deferred.max_difference_with_swap", swapped.max_difference, 0.0, tol.probability);

  CountRange histories;
  for (std::size_t t = 0; t < family.size(); ++t) {
    for (const auto& half : enumerate_good_half_tables(family, t)) {
      histories.add(static_cast<int>(collect_histories(family, {half}).histories.size()));
    }
  }
  r.exact("histories.per_half_table.min", histories.min, 8);
  r.exact("histories.per_half_table.max", histories.max, 8);
  reconstruction_checks(r, family, tol);

  const ObjectiveComparison cmp = compare_objectives(family, kSynthesisRestarts, seed);
  r.at_least("synthesis.readable_info", cmp.readable_info.value, 2.0, tol.synthesis);
  r.at_most("synthesis.readable_info_bound", cmp.readable_info.value, 2.0, tol.synthesis);
  r.at_most("synthesis.unitarity_defect", unitarity_defect(cmp.readable_info.u_a), 0.0, tol.unitarity);
  r.exact("synthesis.maximizers_differ", cmp.maximizers_differ, false);
  r.data()["synthesis"] = {{"restarts", kSynthesisRestarts},
                           {"readable_info", cmp.readable_info.value},
                           {"entanglement", cmp.entanglement.value},
                           {"entanglement_at_readable_best", cmp.entanglement_at_readable_best},
                           {"readable_at_entanglement_best", cmp.readable_at_entanglement_best}};
  return r;
}

VerificationReport grover_iterated(int n, std::uint64_t seed, const Tolerances& tol) {
  VerificationReport r;
  const int k = default_grover_iterations(n);
  const std::vector<double> curve = grover_success_curve(n, 8);
  double worst = 0.0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    worst = std::max(worst, std::abs(curve[i] - closed_form_success(n, static_cast<int>(i) + 1)));
  }
  r.at_most("curve.closed_form_error_max", worst, 0.0, tol.closed_form);

  RunOptions o;
  o.seed = seed;
  const AlgorithmTrace trace = run_grover(n, o);
  r.exact("run.evaluations", trace.evaluations, k);
  r.near("run.success_probability", trace.success_probability, closed_form_success(n, k), tol.closed_form);
  r.at_least("run.success_probability_floor", trace.success_probability, 1.0 - std::pow(2.0, -n), tol.probability);
  r.data()["iterations"] = k;
  r.data()["run"] = trace_to_json(trace, build_family(FamilyKind::Grover, n));
  if (n <= 4) r.data()["queries"] = query_report_to_json(verify_fifty_rule(build_family(FamilyKind::Grover, n)),
                                                          build_family(FamilyKind::Grover, n));
  return r;
}

VerificationReport deutsch_jozsa(int n, std::uint64_t seed, const Tolerances& tol) {
  const ProblemFamily family = build_family(FamilyKind::DeutschJozsa, n);
  VerificationReport r;
  const std::size_t rows = family.arguments();

  if (n == 2) {
    Json listed = Json::array();
    for (const auto& t : family.tables()) listed.push_back(t.index.str());
    r.exact("tables", listed, Json({"0000", "1111", "0011", "1100", "0101", "1010", "0110", "1001"}));
  } else {
    // Two constant tables plus C(2^n, 2^(n-1)) balanced ones.
    double balanced = 1.0;
    for (std::size_t i = 0; i < rows / 2; ++i) balanced = balanced * static_cast<double>(rows - i) / (i + 1.0);
    r.exact("tables.count", family.size(), static_cast<std::size_t>(std::llround(balanced)) + 2);
  }

  double worst = 1.0;
  bool all_right = true;
  for (std::size_t t = 0; t < family.size(); ++t) {
    RunOptions o;
    o.bob_choice = family.table(t).index;
    o.seed = seed + t;
    const AlgorithmTrace trace = run_dj(n, o);
    worst = std::min(worst, trace.success_probability);
    all_right = all_right && trace.success;
  }
  r.near("classification.success_probability_min", worst, 1.0, tol.probability);
  r.exact("classification.all_correct", all_right, true);

  query_checks(r, family, verify_fifty_rule(family), 1, static_cast<int>(rows / 2) + 1, 1);

  CountRange balanced_halves;
  for (std::size_t t = 0; t < family.size(); ++t) {
    if (family.solution(t) == "balanced") {
      balanced_halves.add(static_cast<int>(enumerate_good_half_tables(family, t).size()));
    }
  }
  r.exact("half_tables.balanced.min", balanced_halves.min, 2);
  r.exact("half_tables.balanced.max", balanced_halves.max, 2);

  const double mi = both_parties_contribute(family);
  r.exact("bypass.both_readings_informative", mi > tol.entropy, true);
  r.data()["bypass_mutual_information"] = mi;

  if (n == 2) {
    for (const auto& [x, y] : {std::pair{"0000", "1111"}, std::pair{"0011", "1100"}}) {
      r.exact(std::string("dual.") + x + "/" + y,
              check_dual_projection_no_info(family, BitString::parse(x), BitString::parse(y)), true);
    }
    r.at_most("state.initial", density_distance(prepare_initial(family), ref::dj_initial_state()), 0.0, tol.state);
    r.at_most("state.after_hadamard", density_distance(after_hadamard(family), ref::dj_after_hadamard()), 0.0,
              tol.state);
    reconstruction_checks(r, family, tol);

    // Hadamard is one feasible U_A, so the search must do at least as well.
    const double baseline = readable_info_objective(family, after_hadamard(family));
    const SynthesisResult best = synthesize_UA(family, SynthesisObjective::ReadableInfo, kSynthesisRestarts, seed);
    r.at_least("synthesis.readable_info_vs_hadamard", best.value, baseline, tol.synthesis);
    r.data()["synthesis"] = {{"hadamard", baseline}, {"best", best.value}};
  }
  return r;
}

VerificationReport simon(int n, std::uint64_t seed, const Tolerances& tol) {
  const ProblemFamily family = build_family(FamilyKind::Simon, n);
  VerificationReport r;

  bool orthogonal = true;
  bool recovered = true;
  int evaluations = 0;
  for (std::size_t t = 0; t < family.size(); ++t) {
    RunOptions o;
    o.bob_choice = family.table(t).index;
    o.seed = seed + t;
    const SimonRun run = run_simon(family, o);
    const std::uint64_t h = *simon_period(family.table(t), n);
    for (const auto& s : run.strings) orthogonal = orthogonal && dot_mod2(s.bits, h) == 0;
    recovered = recovered && run.h && run.h->bits == h;
    evaluations = std::max(evaluations, run.evaluations);
  }
  r.exact("runs.strings_orthogonal_to_period", orthogonal, true);
  r.exact("runs.period_recovered", recovered, true);
  r.data()["runs"] = {{"tables", family.size()}, {"max_evaluations", evaluations}};

  const QueryReport q = verify_fifty_rule(family);
  if (n == 2) {
    query_checks(r, family, q, 1, 3, 1);
    const CountRange per_half = half_table_counts(q);
    r.exact("queries.every_half_table.min", per_half.min, 1);
    r.exact("queries.every_half_table.max", per_half.max, 1);
    r.at_most("state.initial", density_distance(prepare_initial(family), ref::simon_initial_state()), 0.0,
              tol.state);
    r.at_most("state.after_hadamard_on_BA", ba_distance(after_hadamard(family), ref::simon_after_hadamard_as_displayed()),
              0.0, tol.state);
    reconstruction_checks(r, family, tol);
  } else {
    r.exact("queries.quantum_exact", q.quantum_exact, true);
    r.exact("queries.with_info_not_above_classical", q.classical_with_info <= q.classical, true);
    r.data()["queries"] = query_report_to_json(q, family);
  }
  return r;
}

VerificationReport permutation(std::uint64_t seed, const Tolerances& tol) {
  const ProblemFamily family = build_family(FamilyKind::Permutation, 2);
  VerificationReport r;

  const std::vector<int> classes = partition_of(family);
  std::vector<int> sizes(3, 0);
  for (int c : classes) ++sizes.at(c - 1);
  r.exact("partition.sizes", sizes, std::vector<int>{8, 8, 8});

  double zero = 0.0;
  for (const auto& dist : single_query_outcomes(family)) {
    const auto it = dist.find(0);
    if (it != dist.end()) zero = std::max(zero, it->second);
  }
  r.at_most("probability.a_reads_00", zero, 0.0, tol.probability);

  double worst = 1.0;
  for (std::size_t t = 0; t < family.size(); ++t) {
    RunOptions o;
    o.bob_choice = family.table(t).index;
    o.seed = seed + t;
    worst = std::min(worst, run_perm(o).trace.success_probability);
  }
  r.near("classification.success_probability_min", worst, 1.0, tol.probability);

  query_checks(r, family, verify_fifty_rule(family), 1, 3, 1);

  // With b itself as the label, every half table leaves two candidates that
  // one more evaluation separates.
  std::vector<std::string> own(family.size());
  for (std::size_t t = 0; t < family.size(); ++t) own[t] = family.table(t).index.str();
  const ProblemFamily by_table(FamilyKind::Custom, "perm-by-table", 2, 2, 8, family.tables(), own, Goodness::Any,
                               VInit::Minus);
  const CountRange per_half = half_table_counts(verify_fifty_rule(by_table));
  r.exact("by_table.every_half_table.min", per_half.min, 1);
  r.exact("by_table.every_half_table.max", per_half.max, 1);

  r.at_most("state.initial", density_distance(prepare_initial(family), ref::perm_initial_state()), 0.0, tol.state);
  r.at_most("state.after_hadamard", density_distance(after_hadamard(family), ref::perm_after_hadamard()), 0.0,
            tol.state);
  reconstruction_checks(r, family, tol);
  return r;
}

void require_n(const std::string& family, int n) {
  bool ok = false;
  if (family == "grover") ok = n >= 2 && n <= kGroverMaxN;
  if (family == "dj" || family == "simon") ok = n == 2 || n == 3;
  if (family == "perm") ok = n == 2;
  if (!ok) throw std::invalid_argument("unsupported size n=" + std::to_string(n) + " for family " + family);
}

Json tolerance_echo(const RunConfig& config) { return config.tolerance ? Json(*config.tolerance) : Json(nullptr); }

}  // namespace

VerificationReport verify_family(const std::string& family, int n, std::uint64_t seed, const Tolerances& tol) {
  require_n(family, n);
  if (family == "grover") return n == 2 ? grover_pair(seed, tol) : grover_iterated(n, seed, tol);
  if (family == "dj") return deutsch_jozsa(n, seed, tol);
  if (family == "simon") return simon(n, seed, tol);
  return permutation(seed, tol);
}

VerificationReport family_report(const ProblemFamily& family, const Tolerances& tol) {
  VerificationReport r;
  r.data()["definition"] = family_to_json(family);

  Json outcomes = Json::array();
  double deviation = 0.0;
  const auto dists = single_query_outcomes(family);
  for (std::size_t t = 0; t < family.size(); ++t) {
    Json dist = Json::object();
    double total = 0.0;
    for (const auto& [a, p] : dists[t]) {
      dist[to_bits(a, family.layout().nA())] = p;
      total += p;
    }
    deviation = std::max(deviation, std::abs(total - 1.0));
    outcomes.push_back({{"b", family.table(t).index.str()}, {"a_distribution", std::move(dist)}});
  }
  r.at_most("quantum.normalization_error_max", deviation, 0.0, tol.probability);

  const QueryReport q = verify_fifty_rule(family);
  r.exact("classical.with_info_not_above_classical", q.classical_with_info <= q.classical, true);
  r.data()["queries"] = query_report_to_json(q, family);
  r.data()["speedup_gap"] = q.quantum_exact && q.quantum < q.classical;
  r.data()["degenerate"] = q.degenerate;
  r.data()["quantum_outcomes"] = std::move(outcomes);
  return r;
}

VerificationReport sweep_report(int n_min, int n_max, const Tolerances& tol) {
  if (n_min < 2 || n_min > n_max) throw std::invalid_argument("need 2 <= n-min <= n-max");
  if (n_max > kGroverMaxN) {
    throw std::invalid_argument("n-max " + std::to_string(n_max) + " exceeds the memory budget (largest n is " +
                                std::to_string(kGroverMaxN) + ")");
  }
  VerificationReport r;
  Json rows = Json::array();
  for (int n = n_min; n <= n_max; ++n) {
    const int k_max = static_cast<int>(std::ceil(std::numbers::pi / 2.0 * std::pow(2.0, 0.5 * n)));
    const std::vector<double> curve = grover_success_curve(n, k_max);
    const auto best = std::max_element(curve.begin(), curve.end());
    const int argmax = static_cast<int>(best - curve.begin()) + 1;
    double worst = 0.0;
    for (int k = 1; k <= k_max; ++k) {
      const double closed = closed_form_success(n, k);
      worst = std::max(worst, std::abs(curve[k - 1] - closed));
      rows.push_back({{"n", n},
                      {"k", k},
                      {"probability", curve[k - 1]},
                      {"closed_form", closed},
                      {"argmax", k == argmax}});
    }
    const std::string tag = "n=" + std::to_string(n);
    r.at_most(tag + ".closed_form_error_max", worst, 0.0, tol.closed_form);
    const int k_default = default_grover_iterations(n);
    r.at_least(tag + ".success_at_default_k", curve[k_default - 1], 1.0 - std::pow(2.0, -n), tol.probability);
    r.data()["argmax"][tag] = {{"k", argmax}, {"probability", *best}, {"default_k", k_default}};
  }
  r.data()["rows"] = std::move(rows);
  return r;
}

VerificationReport cmd_verify(const RunConfig& config) {
  const Tolerances tol = Tolerances::from(config);
  VerificationReport report;
  if (config.family == "all") {
    report.absorb("grover(2)", verify_family("grover", 2, config.seed, tol));
    report.absorb("dj(2)", verify_family("dj", 2, config.seed, tol));
    report.absorb("simon(2)", verify_family("simon", 2, config.seed, tol));
    report.absorb("perm", verify_family("perm", 2, config.seed, tol));
  } else {
    const int n = config.family == "perm" ? 2 : config.n;
    const std::string label = config.family == "perm" ? "perm" : config.family + "(" + std::to_string(n) + ")";
    report.absorb(label, verify_family(config.family, n, config.seed, tol));
  }
  report.config() = {{"command", "verify"},
                     {"family", config.family},
                     {"n", config.family == "all" || config.family == "perm" ? Json(nullptr) : Json(config.n)},
                     {"seed", config.seed},
                     {"tolerance", tolerance_echo(config)}};
  return report;
}

VerificationReport cmd_sweep(const RunConfig& config) {
  if (config.family != "grover") throw std::invalid_argument("sweep supports only --family grover");
  VerificationReport report = sweep_report(config.n_min, config.n_max, Tolerances::from(config));
  report.config() = {{"command", "sweep"},
                     {"family", "grover"},
                     {"n_min", config.n_min},
                     {"n_max", config.n_max},
                     {"tolerance", tolerance_echo(config)}};
  return report;
}

VerificationReport cmd_family(const RunConfig& config) {
  // A built-in family named in `family` and a file holding the same
  // definition give the same report.
  const ProblemFamily family = config.file.empty() ? build_family(config.family, config.n) : load_family(config.file);
  VerificationReport report = family_report(family, Tolerances::from(config));
  report.config() = {{"command", "family"}, {"family", family.label()}, {"tolerance", tolerance_echo(config)}};
  return report;
}

namespace {

std::filesystem::path output_path(const std::string& out) {
  std::filesystem::path path(out);
  const char* dir = std::getenv("HALFINFO_OUT_DIR");
  if (dir != nullptr && *dir != '\0' && path.is_relative()) path = std::filesystem::path(dir) / path;
  return path;
}

// Writes to the stream or the file. Returns false when the file cannot be
// written.
bool emit(const std::string& text, const std::string& out_path, std::ostream& out, std::ostream& err) {
  if (out_path.empty()) {
    out << text;
    return true;
  }
  const std::filesystem::path path = output_path(out_path);
  std::ofstream file(path, std::ios::binary);
  if (!(file << text)) {
    err << "error: cannot write " << path.string() << "\n";
    return false;
  }
  return true;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Checks of the half-information account of oracle algorithms", "halfinfo"};
  app.require_subcommand(1);
  app.set_version_flag("--version", HALFINFO_VERSION);
  RunConfig config;
  const std::vector<std::string> families{"grover", "dj", "simon", "perm"};

  auto add_report_options = [&](CLI::App* sub) {
    sub->add_option("--format", config.format, "json or markdown")->check(CLI::IsMember({"json", "markdown"}));
    sub->add_option("--out", config.out, "write the report here instead of standard output");
    sub->add_option("--tolerance", config.tolerance, "replace every real-valued tolerance")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* verify = app.add_subcommand("verify", "run the check suite of one family or all of them");
  std::vector<std::string> verify_choices = families;
  verify_choices.push_back("all");
  verify->add_option("--family", config.family)->required()->check(CLI::IsMember(verify_choices));
  verify->add_option("--n", config.n);
  verify->add_option("--seed", config.seed);
  add_report_options(verify);

  CLI::App* sweep = app.add_subcommand("sweep", "Grover success probability against the iteration count");
  sweep->add_option("--family", config.family)->required()->check(CLI::IsMember({"grover"}));
  sweep->add_option("--n-min", config.n_min)->required();
  sweep->add_option("--n-max", config.n_max)->required();
  add_report_options(sweep);

  CLI::App* family = app.add_subcommand("family", "query counts and quantum outcomes of a family");
  auto* file_opt = family->add_option("--file", config.file, "family definition (JSON)");
  auto* builtin_opt = family->add_option("--builtin", config.family, "built-in family instead of a file")
                          ->check(CLI::IsMember(families));
  file_opt->excludes(builtin_opt);
  family->add_option("--n", config.n);
  family->add_option("--seed", config.seed);
  add_report_options(family);

  CLI::App* exporter = app.add_subcommand("export", "write a built-in family as JSON");
  exporter->add_option("--family", config.family)->required()->check(CLI::IsMember(families));
  exporter->add_option("--n", config.n);
  exporter->add_option("--out", config.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << HALFINFO_VERSION << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    VerificationReport report;
    if (verify->parsed()) {
      config.command = "verify";
      report = cmd_verify(config);
    } else if (sweep->parsed()) {
      config.command = "sweep";
      report = cmd_sweep(config);
    } else if (family->parsed()) {
      config.command = "family";
      if (config.file.empty() && builtin_opt->count() == 0) throw std::invalid_argument("family needs --file or --builtin");
      report = cmd_family(config);
    } else {
      config.command = "export";
      const std::string text = family_to_json(build_family(config.family, config.n)).dump(2) + "\n";
      return emit(text, config.out, out, err) ? 0 : 2;
    }
    const std::string text = config.format == "markdown" ? render_markdown(report) : render_json(report);
    if (!emit(text, config.out, out, err)) return 2;
    return report.pass() ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace halfinfo
