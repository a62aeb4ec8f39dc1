#include <doctest.h>

#include "lintrack/oracle.hpp"
#include "lintrack/seq_types.hpp"

using namespace lintrack;

namespace {

Event inv(ProcessId p, const std::string& op, Value arg) {
  Event e;
  e.process = p;
  e.kind = Event::Kind::Invocation;
  e.op = op;
  e.arg = std::move(arg);
  return e;
}

Event res(ProcessId p, Value r) {
  Event e;
  e.process = p;
  e.kind = Event::Kind::Response;
  e.res = std::move(r);
  return e;
}

}  // namespace

TEST_CASE("sequential enqueue then dequeue linearizes one way") {
  SequentialSpec q = queue_spec({1});
  Behavior b = {inv(0, "Enqueue", Value::integer(1)), res(0, Value::ack()),
                inv(0, "Dequeue", Value::bottom()), res(0, Value::integer(1))};
  OracleOutcome o = linearizations(q, b, 1);
  CHECK(o.verdict == Verdict::Pass);
  REQUIRE(o.linearizations.size() == 1);
  CHECK(o.linearizations[0].size() == 2);
  REQUIRE(o.configs.size() == 1);
  CHECK(o.configs.configs()[0].sigma == q.initial_state);
  CHECK(behavior_linearizable(q, b, 1) == true);
}

TEST_CASE("a dequeue of a never-enqueued element is not linearizable") {
  SequentialSpec q = queue_spec({1});
  Behavior b = {inv(0, "Dequeue", Value::bottom()), res(0, Value::integer(1))};
  OracleOutcome o = linearizations(q, b, 1);
  CHECK(o.verdict == Verdict::Pass);
  CHECK(o.linearizations.empty());
  CHECK(o.configs.empty());
  CHECK(behavior_linearizable(q, b, 1) == false);
}

TEST_CASE("a pending enqueue may take effect to justify a dequeue") {
  SequentialSpec q = queue_spec({1});
  Behavior b = {inv(0, "Enqueue", Value::integer(1)),
                inv(1, "Dequeue", Value::bottom()), res(1, Value::integer(1))};
  OracleOutcome o = linearizations(q, b, 2);
  CHECK(o.verdict == Verdict::Pass);
  CHECK_FALSE(o.linearizations.empty());
  // the enqueue must have taken effect in every linearization, so process 0
  // is linearized in every final configuration
  for (const AtomicConfiguration& c : o.configs)
    CHECK(c.f[0].linearized());
}

TEST_CASE("the empty behavior has exactly the empty linearization") {
  SequentialSpec q = queue_spec({1});
  OracleOutcome o = linearizations(q, {}, 2);
  CHECK(o.verdict == Verdict::Pass);
  REQUIRE(o.linearizations.size() == 1);
  CHECK(o.linearizations[0].empty());
  REQUIRE(o.configs.size() == 1);
  CHECK(o.configs.configs()[0] ==
        AtomicConfiguration::initial(q.initial_state, 2));
}

TEST_CASE("a tiny node budget reports an exceeded bound") {
  SequentialSpec q = queue_spec({1, 2});
  Behavior b = {inv(0, "Enqueue", Value::integer(1)),
                inv(1, "Enqueue", Value::integer(2))};
  OracleBounds bounds;
  bounds.max_nodes = 1;
  CHECK(linearizations(q, b, 2, bounds).verdict == Verdict::BoundExceeded);
  CHECK_FALSE(behavior_linearizable(q, b, 2, bounds).has_value());
}

TEST_CASE("tracker meta equals the oracle's configurations on a recorded run") {
  CaseParams p;
  CaseStudy cs = hw_queue(p);
  TrackedMachine full = cs.full();

  MachineConfig c = cs.machine->initial_config();
  std::vector<Event> events;
  auto take = [&](std::vector<std::pair<Event, MachineConfig>> succs) {
    events.push_back(succs[0].first);
    c = succs[0].second;
  };
  take(cs.machine->invoke(c, 0, "Enqueue", Value::integer(1)));
  take(cs.machine->invoke(c, 1, "Dequeue", Value::bottom()));
  take(cs.machine->step(c, 0));
  take(cs.machine->step(c, 1));
  take(cs.machine->step(c, 0));
  take(cs.machine->step(c, 0));  // enqueue returns

  LemmaCheckResult lr = lemma_check(full, events);
  CHECK(lr.oracle_verdict == Verdict::Pass);
  CHECK(lr.ok);
  CHECK(lr.tracker_meta == lr.oracle_meta);
}

TEST_CASE("labeling search agrees with the singleton tracker on atomics") {
  Scenario s;
  s.case_study = "atomic-queue";
  s.tracker = "partial";
  s.num_processes = 2;
  s.max_ops_per_process = 1;
  s.values = {1};
  s.max_events = 100;
  ScenarioInstance inst = build_scenario(s);
  TreeSearchResult r = strong_lin_tree_search(inst);
  CHECK(r.verdict == Verdict::Pass);
  CHECK(r.labeling_matches_tracker);
}

TEST_CASE("labeling search rejects the plain queue") {
  Scenario s;
  s.case_study = "hw-queue";
  s.tracker = "full";
  s.num_processes = 2;
  s.max_ops_per_process = 2;
  s.values = {1, 2};
  s.max_events = 100;
  TreeSearchResult r = strong_lin_tree_search(build_scenario(s));
  CHECK(r.verdict == Verdict::Fail);
}
