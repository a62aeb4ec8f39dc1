#include <doctest.h>

#include <algorithm>

#include "lintrack/case_studies.hpp"
#include "lintrack/invariants.hpp"

using namespace lintrack;

namespace {

CaseParams small_params() {
  CaseParams p;
  p.num_processes = 2;
  p.values = {1, 2};
  p.max_total_ops = 4;
  return p;
}

MachineConfig advance(const StepMachine& m, MachineConfig c, ProcessId p,
                      int steps) {
  for (int k = 0; k < steps; ++k) c = m.step(c, p)[0].second;
  return c;
}

}  // namespace

TEST_CASE("queue enqueue-set predicate") {
  CaseStudy cs = hw_queue(small_params());
  const StepMachine& m = *cs.machine;
  MachineConfig c0 = m.initial_config();
  CHECK(good_enq_set(m, c0, {}));
  // X = 1, so no slot may appear in the set
  CHECK_THROWS(good_enq_set(m, c0, {1}));

  // one enqueuer past the reservation: its empty slot may count as
  // linearized because the claimant stands at the store line
  MachineConfig c = m.invoke(c0, 0, "Enqueue", Value::integer(1))[0].second;
  c = advance(m, c, 0, 1);  // reserve slot 1, X becomes 2
  CHECK(good_enq_set(m, c, {}));
  CHECK(good_enq_set(m, c, {1}));

  // after the store the slot is nonempty and must be in the set
  MachineConfig stored = advance(m, c, 0, 1);
  CHECK_FALSE(good_enq_set(m, stored, {}));
  CHECK(good_enq_set(m, stored, {1}));
}

TEST_CASE("queue response and value-sequence predicates") {
  CaseStudy cs = hw_queue(small_params());
  const StepMachine& m = *cs.machine;
  MachineConfig c = m.initial_config();
  c = m.invoke(c, 0, "Enqueue", Value::integer(1))[0].second;
  c = advance(m, c, 0, 1);  // at the store line, slot 1 claimed

  AtomicConfiguration lin = AtomicConfiguration::initial(Value::tuple({}), 2);
  lin.f[0] = {"Enqueue", Value::integer(1), Value::ack()};
  lin.sigma = Value::int_tuple({1});
  CHECK(good_res(m, c, {1}, lin));
  CHECK(values_match_inds(m, c, {1}, lin));

  AtomicConfiguration pend = AtomicConfiguration::initial(Value::tuple({}), 2);
  pend.f[0] = {"Enqueue", Value::integer(1), Value::bottom()};
  // claiming slot 1 as linearized forces an ack response
  CHECK_FALSE(good_res(m, c, {1}, pend));
  CHECK(good_res(m, c, {}, pend));
  CHECK(values_match_inds(m, c, {}, pend));
  CHECK_FALSE(values_match_inds(m, c, {1}, pend));

  // an empty slot without a claimant cannot appear in a slot order
  CHECK_THROWS(values_match_inds(m, m.initial_config(), {1}, pend));
}

TEST_CASE("queue inversion predicate") {
  CaseStudy cs = hw_queue(small_params());
  const StepMachine& m = *cs.machine;
  MachineConfig c = m.initial_config();
  for (int64_t v : {1, 2}) {
    c = m.invoke(c, 0, "Enqueue", Value::integer(v))[0].second;
    c = advance(m, c, 0, 3);  // reserve, store, return
  }
  CHECK(j_inv_seq(m, c, {1, 2}));
  // no dequeuer is scanning, so the inverted order is unjustified
  CHECK_FALSE(j_inv_seq(m, c, {2, 1}));
  CHECK(j_inv_seq(m, c, {}));
}

TEST_CASE("snapshot per-component return set") {
  CaseParams p = small_params();
  CaseStudy cs = jayanti_snapshot(p);
  const StepMachine& m = *cs.machine;
  MachineConfig c = m.initial_config();

  // no scanner active: only the current component value
  CHECK(snapshot_kth_return_set(m, c, 0) ==
        std::vector<Value>{Value::integer(0)});
  CHECK_THROWS(snapshot_kth_return_set(m, c, p.snapshot_m));
  CHECK_THROWS(snapshot_kth_return_set(m, c, -1));

  // a write that has landed moves the set with it
  MachineConfig w = m.invoke(c, 0, "Write",
                             Value::pair(Value::integer(0), Value::integer(1)))[0]
                        .second;
  w = advance(m, w, 0, 1);  // the store to A[0]
  CHECK(snapshot_kth_return_set(m, w, 0) ==
        std::vector<Value>{Value::integer(1)});

  // scanner at its first line still reads the live component
  MachineConfig s = m.invoke(c, 1, "Scan", Value::bottom())[0].second;
  CHECK(snapshot_kth_return_set(m, s, 0) ==
        std::vector<Value>{Value::integer(0)});

  // a finished collect pins the set to the scanner's private copy
  while (s.pc[1] != 12) s = m.step(s, 1)[0].second;
  auto set0 = snapshot_kth_return_set(m, s, 0);
  CHECK(set0 == std::vector<Value>{Value::integer(0)});

  // the predicate assumes at most one scanner
  MachineConfig two = m.invoke(s, 0, "Scan", Value::bottom())[0].second;
  two = m.step(two, 0)[0].second;  // second scanner reaches the loop lines
  CHECK_THROWS(snapshot_kth_return_set(m, two, 0));
}

TEST_CASE("suite registry") {
  CHECK(suite_names() ==
        std::vector<std::string>{"hw-queue-inv", "uf-inv", "snapshot-inv"});
  for (const std::string& n : suite_names())
    CHECK(suite_by_name(n).name == n);
  CHECK_THROWS(suite_by_name("bogus"));
}

TEST_CASE("failed_conjuncts reports the empty meta") {
  CaseStudy cs = hw_queue(small_params());
  TrackedState s{cs.machine->initial_config(), Meta{}};
  auto bad = failed_conjuncts(hw_queue_suite(), *cs.machine, s);
  CHECK(std::find(bad.begin(), bad.end(), "meta-nonempty") != bad.end());
  CHECK(failed_conjuncts(hw_queue_suite(), *cs.machine,
                         cs.partial().initial_state())
            .empty());
}

TEST_CASE("suite sweep passes on the queue and rejects a mismatched pairing") {
  Scenario s;
  s.case_study = "hw-queue";
  s.tracker = "partial";
  s.num_processes = 2;
  s.max_ops_per_process = 1;
  s.values = {1};
  s.max_events = 100;
  ScenarioInstance inst = build_scenario(s);
  SuiteReport r = run_suite(hw_queue_suite(), inst);
  CHECK(r.verdict == Verdict::Pass);
  CHECK(r.states_checked > 0);
  CHECK_THROWS(run_suite(union_find_suite(), inst));
}

TEST_CASE("suite sweep catches a buggy variant with a replayable trace") {
  Scenario s;
  s.case_study = "hw-queue";
  s.mutant = "dequeue-scan-backwards";
  s.tracker = "partial";
  s.num_processes = 2;
  s.max_ops_per_process = 2;
  s.values = {1, 2};
  s.max_events = 100;
  ScenarioInstance inst = build_scenario(s);
  SuiteReport r = run_suite(hw_queue_suite(), inst);
  REQUIRE(r.verdict == Verdict::Fail);
  CHECK_FALSE(r.violated.empty());
  REQUIRE(r.counterexample);
  auto run = replay_events(*inst.machine, inst.machine->initial_config(),
                           r.counterexample->events);
  CHECK(run);
}
