#include <doctest.h>

#include <algorithm>

#include "lintrack/explorer.hpp"

using namespace lintrack;

namespace {

Scenario small(const std::string& cs, const std::string& tracker) {
  Scenario s;
  s.case_study = cs;
  s.tracker = tracker;
  s.num_processes = 2;
  s.max_ops_per_process = 2;
  s.values = {1, 2};
  s.max_events = 100;
  return s;
}

}  // namespace

TEST_CASE("exhaustive exploration is deterministic and thread-count invariant") {
  Scenario s = small("hw-queue", "partial");
  ExplorationReport r1 = explore(s, Property::MetaNonempty);
  ExplorationReport r2 = explore(s, Property::MetaNonempty);
  CHECK(r1.verdict == Verdict::Pass);
  CHECK(r1.states_visited == r2.states_visited);
  CHECK(r1.transitions == r2.transitions);

  s.threads = 4;
  ExplorationReport r4 = explore(s, Property::MetaNonempty);
  CHECK(r4.verdict == Verdict::Pass);
  CHECK(r4.states_visited == r1.states_visited);
  CHECK(r4.transitions == r1.transitions);
}

TEST_CASE("generator respects budgets and roles") {
  Scenario s = small("hw-queue", "full");
  ScenarioInstance inst = build_scenario(s);
  MachineConfig c = inst.machine->initial_config();

  auto choices = generator_choices(*inst.machine, c, {1, 1}, inst.roles,
                                   inst.tracker.spec().operations);
  // two processes, each may invoke Enqueue(1), Enqueue(2) or Dequeue
  CHECK(choices.size() == 6);
  for (const Choice& ch : choices) CHECK(ch.is_invocation);

  // an exhausted budget silences the process
  choices = generator_choices(*inst.machine, c, {0, 1}, inst.roles,
                              inst.tracker.spec().operations);
  CHECK(choices.size() == 3);
  for (const Choice& ch : choices) CHECK(ch.process == 1);

  // roles restrict the operation menu
  choices = generator_choices(*inst.machine, c, {1, 1},
                              {{"Dequeue"}, {"Dequeue"}},
                              inst.tracker.spec().operations);
  CHECK(choices.size() == 2);
  for (const Choice& ch : choices) CHECK(ch.op == "Dequeue");
}

TEST_CASE("single-writer single-scanner scenarios default to fixed roles") {
  Scenario s = small("jayanti-snapshot", "partial");
  ScenarioInstance inst = build_scenario(s);
  REQUIRE(inst.roles.size() == 2);
  CHECK(inst.roles[0] == std::vector<std::string>{"Write"});
  CHECK(inst.roles[1] == std::vector<std::string>{"Scan"});
}

TEST_CASE("a too-small event budget reports an exceeded bound, not a pass") {
  Scenario s = small("hw-queue", "full");
  s.max_events = 3;
  ExplorationReport r = explore(s, Property::MetaNonempty);
  CHECK(r.verdict == Verdict::BoundExceeded);
}

TEST_CASE("random walks are seed deterministic") {
  Scenario s = small("hw-queue", "partial");
  ScenarioInstance inst = build_scenario(s);
  ExplorationReport a = random_walk(inst, Property::MetaNonempty, 123);
  ExplorationReport b = random_walk(inst, Property::MetaNonempty, 123);
  CHECK(a.transitions == b.transitions);
  CHECK(a.max_depth == b.max_depth);
  CHECK(a.verdict == b.verdict);
}

TEST_CASE("the queue is linearizable but not strongly linearizable") {
  Scenario s = small("hw-queue", "full");
  CHECK(explore(s, Property::MetaNonempty).verdict == Verdict::Pass);
  ExplorationReport r = check_strong(s);
  CHECK(r.verdict == Verdict::Fail);
  REQUIRE(r.counterexample);
  CHECK_FALSE(r.counterexample->events.empty());
}

TEST_CASE("reachable state sampling respects its cap") {
  Scenario s = small("hw-queue", "partial");
  ScenarioInstance inst = build_scenario(s);
  auto states = reachable_states(inst, 50);
  CHECK(states.size() == 50);
  CHECK(std::find(states.begin(), states.end(),
                  inst.tracker.initial_state()) != states.end());
}
