#include <doctest.h>

#include <json.hpp>

#include "lintrack/report_io.hpp"

using namespace lintrack;
using nlohmann::json;

TEST_CASE("value JSON round trips") {
  for (const Value& v : {Value::bottom(), Value::ack(), Value::integer(-7),
                         Value::int_tuple({1, 2, 3}), Value::int_tuple({})}) {
    CHECK(value_from_json(value_to_json(v)) == v);
  }
  CHECK(value_to_json(Value::bottom()).is_null());
  CHECK(value_to_json(Value::ack()) == json("ack"));
  CHECK(value_to_json(Value::integer(5)) == json(5));
  CHECK_THROWS_AS(value_from_json(json("frobnicate")), SchemaError);
  CHECK_THROWS_AS(value_from_json(json(1.5)), SchemaError);
}

TEST_CASE("event JSON round trips") {
  Event e;
  e.process = 1;
  e.line = 5;
  e.kind = Event::Kind::Invocation;
  e.op = "Dequeue";
  e.arg = Value::bottom();
  e.branch = 2;
  Event back = event_from_json(event_to_json(e));
  CHECK(back.process == e.process);
  CHECK(back.line == e.line);
  CHECK(back.kind == e.kind);
  CHECK(back.op == e.op);
  CHECK(back.branch == e.branch);

  json j = event_to_json(e);
  j["kind"] = "teleport";
  CHECK_THROWS_AS(event_from_json(j), SchemaError);
}

TEST_CASE("scenario files round trip and reject unknown or bad fields") {
  json j = {{"case_study", "hw-queue"}, {"tracker", "partial"},
            {"processes", 2},           {"max_ops_per_process", 2},
            {"values", {1, 2}},         {"max_events", 100},
            {"mode", "explore"}};
  ScenarioFile sf = scenario_file_from_json(j);
  CHECK(sf.scenario.case_study == "hw-queue");
  CHECK(sf.scenario.tracker == "partial");
  CHECK(sf.scenario.num_processes == 2);
  CHECK(sf.scenario.values == std::vector<int64_t>{1, 2});
  CHECK(sf.mode == "explore");

  ScenarioFile back = scenario_file_from_json(scenario_file_to_json(sf));
  CHECK(back.scenario.case_study == sf.scenario.case_study);
  CHECK(back.scenario.max_events == sf.scenario.max_events);
  CHECK(back.mode == sf.mode);

  json unknown = j;
  unknown["frobs"] = 3;
  CHECK_THROWS_AS(scenario_file_from_json(unknown), SchemaError);

  json bad_mode = j;
  bad_mode["mode"] = "telepathy";
  CHECK_THROWS_AS(scenario_file_from_json(bad_mode), SchemaError);

  json bad_tracker = j;
  bad_tracker["tracker"] = "imaginary";
  CHECK_THROWS_AS(scenario_file_from_json(bad_tracker), SchemaError);

  json no_case = j;
  no_case.erase("case_study");
  CHECK_THROWS_AS(scenario_file_from_json(no_case), SchemaError);

  // suite mode requires the suite name
  json suite_mode = j;
  suite_mode["mode"] = "suite";
  CHECK_THROWS_AS(scenario_file_from_json(suite_mode), SchemaError);
  suite_mode["suite"] = "hw-queue-inv";
  CHECK(scenario_file_from_json(suite_mode).suite == "hw-queue-inv");
}

TEST_CASE("reports round trip and a fail verdict needs evidence") {
  ScenarioFile sf;
  sf.scenario.case_study = "hw-queue";
  sf.scenario.tracker = "partial";
  sf.scenario.max_events = 100;

  Report r;
  r.verdict = "pass";
  r.check = "meta-nonempty";
  r.states_visited = 10;
  r.transitions = 20;
  r.seconds = 0.5;
  r.scenario = sf;
  Report back = report_from_json(report_to_json(r));
  CHECK(back.verdict == "pass");
  CHECK(back.check == "meta-nonempty");
  CHECK(back.states_visited == 10);
  CHECK(back.scenario.scenario.case_study == "hw-queue");

  json evidence_free = report_to_json(r);
  evidence_free["verdict"] = "fail";
  CHECK_THROWS_AS(report_from_json(evidence_free), SchemaError);

  json with_trace = report_to_json(r);
  with_trace["verdict"] = "fail";
  Event e;
  e.kind = Event::Kind::Invocation;
  e.op = "Enqueue";
  e.arg = Value::integer(1);
  e.line = 1;
  json te = event_to_json(e);
  te["pre_meta"] = 1;
  te["post_meta"] = 0;
  with_trace["counterexample"] = json::array({te});
  Report fr = report_from_json(with_trace);
  CHECK(fr.verdict == "fail");
  REQUIRE(fr.counterexample.size() == 1);
  CHECK(fr.counterexample[0].post_meta == 0);
}

TEST_CASE("trace annotation computes meta sizes along the replay") {
  ScenarioFile sf;
  sf.scenario.case_study = "hw-queue";
  sf.scenario.tracker = "full";
  sf.scenario.max_events = 100;
  ScenarioInstance inst = build_scenario(sf.scenario);

  MachineConfig c = inst.machine->initial_config();
  auto succs = inst.machine->invoke(c, 0, "Enqueue", Value::integer(1));
  std::vector<Event> events = {succs[0].first};
  auto trace = annotate_trace(inst, events);
  REQUIRE(trace.size() == 1);
  CHECK(trace[0].pre_meta == 1);
  CHECK(trace[0].post_meta == 2);

  std::string text = render_trace(inst, trace);
  CHECK(text.find("Enqueue") != std::string::npos);
  CHECK(text.find("1 -> 2") != std::string::npos);
}

TEST_CASE("make_report embeds the scenario and maps verdicts") {
  ScenarioFile sf;
  sf.scenario.case_study = "hw-queue";
  sf.scenario.tracker = "partial";
  sf.scenario.max_events = 100;
  ScenarioInstance inst = build_scenario(sf.scenario);
  ExplorationReport er = explore(inst, Property::MetaNonempty);
  Report r = make_report(sf, inst, er, 1.25);
  CHECK(r.verdict == "pass");
  CHECK(r.check == "meta-nonempty");
  CHECK(r.states_visited == er.states_visited);
  CHECK(r.seconds == 1.25);
  CHECK(r.scenario.scenario.case_study == "hw-queue");
  CHECK(verdict_string(Verdict::BoundExceeded) == "inconclusive");
}
