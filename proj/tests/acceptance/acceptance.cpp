// End-to-end acceptance checks, one verdict line per criterion. Exits
// nonzero if any criterion fails. Each criterion is exhaustive within the
// stated desk-scale bounds.

#include <cstdio>
#include <string>
#include <vector>

#include "lintrack/case_studies.hpp"
#include "lintrack/explorer.hpp"
#include "lintrack/invariants.hpp"
#include "lintrack/oracle.hpp"
#include "lintrack/report_io.hpp"
#include "lintrack/seq_types.hpp"
#include "lintrack/tracker.hpp"

using namespace lintrack;

namespace {

int failures = 0;

void report(int n, const std::string& what, bool ok) {
  std::printf("criterion %d (%s): %s\n", n, what.c_str(), ok ? "PASS" : "FAIL");
  if (!ok) ++failures;
}

Scenario base_scenario(const std::string& cs, const std::string& tracker) {
  Scenario s;
  s.case_study = cs;
  s.tracker = tracker;
  s.num_processes = 2;
  s.max_ops_per_process = 2;
  s.values = {1, 2};
  s.uf_n = 3;
  s.snapshot_m = 2;
  s.max_events = 100;
  return s;
}

bool explore_passes(const Scenario& s) {
  return explore(s, Property::MetaNonempty).verdict == Verdict::Pass;
}

// criterion 1: the full tracker's meta-configuration equals the set of final
// configurations of the behavior's linearizations, on every run within the
// bounds, for the atomic queue and the array queue
bool lemma_equality() {
  OracleBounds bounds;
  bounds.max_behavior_events = 10;
  for (const char* name : {"atomic-queue", "hw-queue"}) {
    Scenario s = base_scenario(name, "full");
    LemmaSweepResult r = lemma_sweep(build_scenario(s), bounds);
    if (r.verdict != Verdict::Pass) return false;
  }
  return true;
}

// criterion 2: M != 0 at every reachable state for the array queue (both
// trackers), the snapshot (partial tracker, one writer + one scanner), and
// the atomic implementations of all three types
bool linearizability_explorations() {
  if (!explore_passes(base_scenario("hw-queue", "full"))) return false;
  if (!explore_passes(base_scenario("hw-queue", "partial"))) return false;
  if (!explore_passes(base_scenario("jayanti-snapshot", "partial")))
    return false;
  for (const char* name :
       {"atomic-queue", "atomic-union-find", "atomic-snapshot"})
    if (!explore_passes(base_scenario(name, "full"))) return false;
  return true;
}

// criterion 3: |M| = 1 everywhere for the union-find under its partial
// tracker with one-try and two-try retry budgets, and the independent
// labeling search agrees with the tracker at every node
bool strong_linearizability() {
  for (int tries : {1, 2}) {
    Scenario s = base_scenario("jt-union-find", "partial");
    s.uf_max_tries = tries;
    ScenarioInstance inst = build_scenario(s);
    if (check_strong(inst).verdict != Verdict::Pass) return false;
    TreeSearchResult t = strong_lin_tree_search(inst);
    if (t.verdict != Verdict::Pass || !t.labeling_matches_tracker)
      return false;
  }
  return true;
}

// criterion 4: every shipped partial tracker's per-line updates stay inside
// the full operators over all reachable states, and coupled replays keep the
// partial meta a subset of the full one
bool partial_tracker_validity() {
  struct Case {
    const char* name;
    int tries;
  };
  for (const Case& c : {Case{"hw-queue", 1}, Case{"jt-union-find", 1},
                        Case{"jt-union-find", 2}, Case{"jayanti-snapshot", 1}}) {
    Scenario s = base_scenario(c.name, "partial");
    s.uf_max_tries = c.tries;
    ScenarioInstance inst = build_scenario(s);
    std::vector<TrackedState> samples = reachable_states(inst, 1u << 20);
    if (!validate_partial(inst.tracker, samples).ok()) return false;

    TrackedMachine full = full_tracker(*inst.machine, inst.cs.spec);
    ExplorationReport probe = explore(inst, Property::MetaSingleton);
    if (probe.counterexample) {
      if (coupled_domination_violation(inst.tracker, full,
                                       probe.counterexample->events))
        return false;
    }
  }
  return true;
}

// criterion 5: each mutant fails with a minimal, deterministically
// replayable counterexample (no shorter run fails within the same scenario)
bool mutant_counterexamples() {
  struct M {
    const char* cs;
    const char* mutant;
  };
  for (const M& m : {M{"hw-queue", "dequeue-no-swap"},
                     M{"hw-queue", "dequeue-scan-backwards"},
                     M{"jt-union-find", "link-larger-under-smaller"},
                     M{"jt-union-find", "find-returns-parent"},
                     M{"jayanti-snapshot", "scan-skips-overwrite"},
                     M{"jayanti-snapshot", "write-never-forwards"}}) {
    Scenario s = base_scenario(m.cs, "full");
    s.mutant = m.mutant;
    ScenarioInstance inst = build_scenario(s);
    ExplorationReport r = explore(inst, Property::MetaNonempty);
    if (r.verdict != Verdict::Fail || !r.counterexample) return false;

    // deterministic replay reproduces the empty meta-configuration
    std::vector<TraceEvent> trace =
        annotate_trace(inst, r.counterexample->events);
    if (trace.empty() || trace.back().post_meta != 0) return false;

    // exhaustive search over strictly shorter runs finds no violation. The
    // explorer checks successors before depth pruning, so capping the depth
    // at len-2 is what excludes exactly the runs of length >= len.
    Scenario shorter = s;
    shorter.max_events = static_cast<int>(r.counterexample->events.size()) - 2;
    if (explore(shorter, Property::MetaNonempty).verdict == Verdict::Fail)
      return false;
  }
  return true;
}

// criterion 6: the three predicate suites hold at every reachable tracked
// state and across every transition of the partial-tracker scenarios
bool invariant_suites() {
  struct S {
    const char* cs;
    const char* suite;
    int tries;
  };
  for (const S& s : {S{"hw-queue", "hw-queue-inv", 1},
                     S{"jt-union-find", "uf-inv", 1},
                     S{"jt-union-find", "uf-inv", 2},
                     S{"jayanti-snapshot", "snapshot-inv", 1}}) {
    Scenario sc = base_scenario(s.cs, "partial");
    sc.uf_max_tries = s.tries;
    SuiteReport r = run_suite(suite_by_name(s.suite), build_scenario(sc));
    if (r.verdict != Verdict::Pass) return false;
  }
  return true;
}

// criterion 7: randomized property checks (fixed seeds, >= 10^3 cases each):
// evolve extensivity and monotonicity, behavior preservation under
// augmentation, sequential FIFO / canonical-growth / pure-read laws, and
// replay determinism; implemented in the unit suite, re-run here
bool property_suites();

}  // namespace

#include "properties.inc"

int main() {
  report(1, "tracker equals brute-force linearization oracle", lemma_equality());
  report(2, "linearizability explorations all pass", linearizability_explorations());
  report(3, "strong linearizability of the union-find", strong_linearizability());
  report(4, "partial trackers stay inside the full operators", partial_tracker_validity());
  report(5, "mutants fail with minimal replayable counterexamples", mutant_counterexamples());
  report(6, "predicate suites hold inductively", invariant_suites());
  report(7, "randomized property suites", property_suites());
  return failures == 0 ? 0 : 1;
}
