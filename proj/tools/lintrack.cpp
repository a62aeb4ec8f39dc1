#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "lintrack/case_studies.hpp"
#include "lintrack/explorer.hpp"
#include "lintrack/invariants.hpp"
#include "lintrack/oracle.hpp"
#include "lintrack/report_io.hpp"

using namespace lintrack;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;

int default_threads() {
  if (const char* env = std::getenv("LINTRACK_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

void emit_report(const Report& r, const std::string& out_path, bool pretty) {
  nlohmann::json j = report_to_json(r);
  std::string doc = j.dump(pretty ? 2 : -1);
  if (out_path.empty()) {
    std::cout << doc << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw SchemaError("cannot write report file: " + out_path);
    out << doc << "\n";
  }
}

int exit_code(const std::string& verdict) {
  if (verdict == "pass") return kExitPass;
  if (verdict == "fail") return kExitFail;
  return kExitInconclusive;
}

double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

Report run_suite_mode(const ScenarioFile& sf, const ScenarioInstance& inst,
                      std::chrono::steady_clock::time_point t0) {
  PredicateSuite suite = suite_by_name(sf.suite);
  SuiteReport sr = run_suite(suite, inst);
  Report r;
  r.verdict = verdict_string(sr.verdict);
  r.check = suite.name;
  r.states_visited = sr.states_checked;
  r.transitions = sr.transitions_checked;
  r.violated_conjuncts = sr.violated;
  r.scenario = sf;
  if (sr.counterexample) {
    r.detail = sr.counterexample->detail;
    if (!sr.pre_state_held) r.detail += " (pre-state already violating)";
    r.counterexample = annotate_trace(inst, sr.counterexample->events);
  }
  r.seconds = elapsed(t0);
  return r;
}

Report run_check(const ScenarioFile& sf, const ScenarioInstance& inst) {
  auto t0 = std::chrono::steady_clock::now();
  if (sf.mode == "suite") return run_suite_mode(sf, inst, t0);

  ExplorationReport er;
  if (sf.mode == "strong") {
    er = check_strong(inst);
  } else if (sf.mode == "random") {
    er = random_walk(inst, Property::MetaNonempty, sf.scenario.seed);
    for (uint64_t k = 1; k < sf.runs && er.verdict == Verdict::Pass; ++k) {
      ExplorationReport next =
          random_walk(inst, Property::MetaNonempty, sf.scenario.seed + k);
      next.states_visited += er.states_visited;
      next.transitions += er.transitions;
      er = std::move(next);
    }
    // sampling cannot certify the whole space
    if (er.verdict == Verdict::Pass) er.verdict = Verdict::BoundExceeded;
  } else {
    er = explore(inst, Property::MetaNonempty);
  }
  return make_report(sf, inst, er, elapsed(t0));
}

int replay_report(const std::string& path, const std::string& out_path,
                  bool pretty) {
  Report recorded = load_report(path);
  ScenarioInstance inst = build_scenario(recorded.scenario.scenario);
  std::vector<Event> events;
  for (const TraceEvent& te : recorded.counterexample)
    events.push_back(te.event);
  auto t0 = std::chrono::steady_clock::now();
  std::vector<TraceEvent> trace = annotate_trace(inst, events);

  Report r;
  r.check = recorded.check;
  r.scenario = recorded.scenario;
  r.states_visited = trace.size();
  r.counterexample = trace;
  if (recorded.scenario.mode == "suite") {
    TrackedState state = inst.tracker.initial_state();
    auto run =
        replay_events(*inst.machine, inst.machine->initial_config(), events);
    Meta meta = inst.tracker.meta_init();
    MachineConfig pre = run->initial;
    for (const auto& [ev, post] : run->steps) {
      meta = inst.tracker.apply_line(meta, ev, pre, post);
      pre = post;
    }
    state = TrackedState{pre, meta};
    r.violated_conjuncts =
        failed_conjuncts(suite_by_name(recorded.scenario.suite),
                         *inst.machine, state);
    r.verdict = r.violated_conjuncts.empty() ? "pass" : "fail";
  } else {
    bool singleton = recorded.scenario.mode == "strong";
    bool violated = false;
    for (const TraceEvent& te : trace)
      if (singleton ? te.post_meta != 1 : te.post_meta == 0) violated = true;
    r.verdict = violated ? "fail" : "pass";
  }
  r.detail = "replayed from " + path;
  r.seconds = elapsed(t0);
  emit_report(r, out_path, pretty);
  if (pretty) std::cerr << render_trace(inst, trace);
  std::cerr << "replay verdict: " << r.verdict << "\n";
  return exit_code(r.verdict);
}

int cmd_check(const std::string& scenario_path, const std::string& replay_path,
              const std::string& out_path, bool pretty, int threads) {
  if (!replay_path.empty()) return replay_report(replay_path, out_path, pretty);
  if (scenario_path.empty())
    throw SchemaError("check needs a scenario file or --replay");
  ScenarioFile sf = load_scenario_file(scenario_path);
  if (threads > 0) sf.scenario.threads = threads;
  ScenarioInstance inst = build_scenario(sf.scenario);
  Report r = run_check(sf, inst);
  emit_report(r, out_path, pretty);
  std::cerr << r.check << ": " << r.verdict << " (" << r.states_visited
            << " states, " << r.seconds << "s)\n";
  if (!r.violated_conjuncts.empty()) {
    std::cerr << "violated:";
    for (const std::string& c : r.violated_conjuncts) std::cerr << " " << c;
    std::cerr << "\n";
  }
  if (pretty && !r.counterexample.empty())
    std::cerr << render_trace(inst, r.counterexample);
  return exit_code(r.verdict);
}

int cmd_oracle_diff(const std::string& scenario_path,
                    const std::string& out_path, bool pretty) {
  ScenarioFile sf = load_scenario_file(scenario_path);
  if (sf.scenario.tracker != "full")
    throw SchemaError("oracle-diff compares the full tracker; set tracker=full");
  ScenarioInstance inst = build_scenario(sf.scenario);
  auto t0 = std::chrono::steady_clock::now();
  LemmaSweepResult res = lemma_sweep(inst, sf.oracle_bounds);

  Report r;
  r.verdict = verdict_string(res.verdict);
  r.check = "tracker-oracle-equality";
  r.states_visited = res.nodes_checked;
  r.transitions = res.behaviors_checked;
  r.scenario = sf;
  r.seconds = elapsed(t0);
  if (res.mismatch) {
    r.detail = res.mismatch->detail + "; tracker " + res.tracker_meta_str +
               " vs oracle " + res.oracle_meta_str;
    r.counterexample = annotate_trace(inst, res.mismatch->events);
  }
  emit_report(r, out_path, pretty);
  std::cerr << r.check << ": " << r.verdict << " (" << res.nodes_checked
            << " states, " << res.behaviors_checked << " behavior classes, "
            << r.seconds << "s)\n";
  if (res.mismatch) std::cerr << r.detail << "\n";
  if (pretty && !r.counterexample.empty())
    std::cerr << render_trace(inst, r.counterexample);
  return exit_code(r.verdict);
}

int cmd_list(const std::string& mutants_of, bool suites) {
  if (suites) {
    for (const std::string& s : suite_names()) std::cout << s << "\n";
    return kExitPass;
  }
  if (!mutants_of.empty()) {
    CaseStudy cs = make_case_study(mutants_of, CaseParams{});
    for (const Mutant& m : cs.mutants)
      std::cout << m.name << "\t" << m.description << "\n";
    return kExitPass;
  }
  for (const std::string& name : case_study_names()) {
    CaseStudy cs = make_case_study(name, CaseParams{});
    std::cout << name << "\t" << cs.mutants.size() << " mutants"
              << (cs.has_partial() ? ", partial tracker" : "") << "\n";
  }
  return kExitPass;
}

int cmd_validate_tracker(const std::string& scenario_path, size_t max_samples,
                         int runs) {
  ScenarioFile sf = load_scenario_file(scenario_path);
  sf.scenario.tracker = "partial";
  ScenarioInstance inst = build_scenario(sf.scenario);

  std::vector<TrackedState> samples = reachable_states(inst, max_samples);
  ValidationReport vr = validate_partial(inst.tracker, samples);
  std::cerr << "validate_partial: " << vr.checks << " checks, "
            << vr.violations.size() << " violations\n";
  for (const TrackerViolation& v : vr.violations)
    std::cerr << "  line " << v.line << " p" << v.process << ": " << v.detail
              << "\n";

  // coupled replays: random schedules through the base machine, checking the
  // partial meta stays inside the full one step by step
  TrackedMachine full = full_tracker(*inst.machine, inst.cs.spec);
  std::mt19937_64 rng(sf.scenario.seed);
  int coupled_bad = 0;
  for (int k = 0; k < runs; ++k) {
    MachineConfig cfg = inst.machine->initial_config();
    std::vector<int> budgets(sf.scenario.num_processes,
                             sf.scenario.max_ops_per_process);
    std::vector<Event> events;
    for (int step = 0; step < sf.scenario.max_events; ++step) {
      auto choices = generator_choices(*inst.machine, cfg, budgets, inst.roles,
                                       inst.cs.spec.operations);
      if (choices.empty()) break;
      const Choice& ch =
          choices[std::uniform_int_distribution<size_t>(0, choices.size() - 1)(
              rng)];
      auto succs = ch.is_invocation
                       ? inst.machine->invoke(cfg, ch.process, ch.op, ch.arg)
                       : inst.machine->step(cfg, ch.process);
      if (succs.empty()) continue;
      auto& [ev, next] =
          succs[std::uniform_int_distribution<size_t>(0, succs.size() - 1)(rng)];
      if (ch.is_invocation) --budgets[ch.process];
      events.push_back(ev);
      cfg = next;
    }
    if (auto bad = coupled_domination_violation(inst.tracker, full, events)) {
      std::cerr << "coupled replay " << k << ": violation at step " << *bad
                << "\n";
      ++coupled_bad;
    }
  }
  std::cerr << "coupled replays: " << runs << " runs, " << coupled_bad
            << " violations\n";
  return (vr.ok() && coupled_bad == 0) ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bounded linearizability and strong-linearizability checker"};
  app.require_subcommand(1);

  std::string scenario_path, replay_path, out_path;
  bool pretty = false;
  int threads = 0;

  CLI::App* check = app.add_subcommand("check", "run a scenario's check");
  check->add_option("scenario", scenario_path, "scenario JSON file");
  check->add_option("--replay", replay_path,
                    "re-execute a recorded counterexample report");
  check->add_option("--out", out_path, "write the report here (default stdout)");
  check->add_flag("--pretty", pretty, "indent JSON and render the trace");
  check->add_option("--threads", threads, "parallel exploration workers");

  std::string diff_scenario, diff_out;
  bool diff_pretty = false;
  CLI::App* diff = app.add_subcommand(
      "oracle-diff", "cross-check the tracker against the brute-force oracle");
  diff->add_option("scenario", diff_scenario, "scenario JSON file")->required();
  diff->add_option("--out", diff_out, "write the report here (default stdout)");
  diff->add_flag("--pretty", diff_pretty, "indent JSON and render the trace");

  std::string mutants_of;
  bool list_suites = false;
  CLI::App* list = app.add_subcommand("list", "list case studies");
  list->add_option("--mutants", mutants_of, "list a case study's mutants");
  list->add_flag("--suites", list_suites, "list the invariant suites");

  std::string val_scenario;
  size_t val_samples = 20000;
  int val_runs = 200;
  CLI::App* val = app.add_subcommand(
      "validate-tracker", "check the partial tracker against the full one");
  val->add_option("scenario", val_scenario, "scenario JSON file")->required();
  val->add_option("--samples", val_samples, "reachable states to sample");
  val->add_option("--runs", val_runs, "coupled random replays");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (check->parsed())
      return cmd_check(scenario_path, replay_path, out_path, pretty,
                       threads > 0 ? threads : default_threads());
    if (diff->parsed()) return cmd_oracle_diff(diff_scenario, diff_out, diff_pretty);
    if (list->parsed()) return cmd_list(mutants_of, list_suites);
    if (val->parsed())
      return cmd_validate_tracker(val_scenario, val_samples, val_runs);
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
