#include "lintrack/report_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace lintrack {

namespace {

using nlohmann::json;

void require_keys(const json& j, const std::set<std::string>& allowed,
                  const std::string& what) {
  if (!j.is_object()) throw SchemaError(what + ": expected an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key()))
      throw SchemaError(what + ": unknown key '" + it.key() + "'");
}

template <typename T>
T get_or(const json& j, const std::string& key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw SchemaError("field '" + key + "' has the wrong type");
  }
}

template <typename T>
T get_required(const json& j, const std::string& key) {
  if (!j.contains(key)) throw SchemaError("missing required field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw SchemaError("field '" + key + "' has the wrong type");
  }
}

}  // namespace

ScenarioFile scenario_file_from_json(const json& j) {
  require_keys(j,
               {"case_study", "mutant", "processes", "max_ops_per_process",
                "max_events", "values", "mode", "tracker", "suite", "seed",
                "runs", "oracle_bounds", "uf_n", "uf_max_tries", "snapshot_m",
                "max_states", "threads", "roles"},
               "scenario");
  ScenarioFile sf;
  Scenario& s = sf.scenario;
  s.case_study = get_required<std::string>(j, "case_study");
  s.mutant = get_or<std::string>(j, "mutant", "");
  s.num_processes = get_required<int>(j, "processes");
  s.max_ops_per_process = get_required<int>(j, "max_ops_per_process");
  s.max_events = get_required<int>(j, "max_events");
  s.values = get_required<std::vector<int64_t>>(j, "values");
  s.tracker = get_or<std::string>(j, "tracker", "full");
  s.uf_n = get_or<int>(j, "uf_n", s.uf_n);
  s.uf_max_tries = get_or<int>(j, "uf_max_tries", s.uf_max_tries);
  s.snapshot_m = get_or<int>(j, "snapshot_m", s.snapshot_m);
  s.max_states = get_or<uint64_t>(j, "max_states", s.max_states);
  s.threads = get_or<int>(j, "threads", s.threads);
  s.seed = get_or<uint64_t>(j, "seed", s.seed);
  s.roles = get_or<std::vector<std::vector<std::string>>>(j, "roles", {});
  sf.mode = get_required<std::string>(j, "mode");
  sf.suite = get_or<std::string>(j, "suite", "");
  sf.runs = get_or<uint64_t>(j, "runs", 1);
  if (j.contains("oracle_bounds")) {
    const json& ob = j.at("oracle_bounds");
    require_keys(ob, {"max_behavior_events", "max_nodes"}, "oracle_bounds");
    sf.oracle_bounds.max_behavior_events =
        get_or<size_t>(ob, "max_behavior_events",
                       sf.oracle_bounds.max_behavior_events);
    sf.oracle_bounds.max_nodes =
        get_or<uint64_t>(ob, "max_nodes", sf.oracle_bounds.max_nodes);
  }

  if (sf.mode != "explore" && sf.mode != "strong" && sf.mode != "random" &&
      sf.mode != "suite")
    throw SchemaError("field 'mode' must be explore, strong, random or suite");
  if (s.tracker != "full" && s.tracker != "partial")
    throw SchemaError("field 'tracker' must be full or partial");
  if (sf.mode == "suite" && sf.suite.empty())
    throw SchemaError("mode 'suite' requires field 'suite'");
  if (s.num_processes < 1) throw SchemaError("field 'processes' must be >= 1");
  if (s.max_ops_per_process < 0)
    throw SchemaError("field 'max_ops_per_process' must be >= 0");
  if (s.max_events < 0) throw SchemaError("field 'max_events' must be >= 0");
  return sf;
}

ScenarioFile load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open scenario file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw SchemaError("scenario file is not valid JSON: " +
                      std::string(e.what()));
  }
  return scenario_file_from_json(j);
}

json scenario_file_to_json(const ScenarioFile& sf) {
  const Scenario& s = sf.scenario;
  json j{{"case_study", s.case_study},
         {"processes", s.num_processes},
         {"max_ops_per_process", s.max_ops_per_process},
         {"max_events", s.max_events},
         {"values", s.values},
         {"mode", sf.mode},
         {"tracker", s.tracker},
         {"uf_n", s.uf_n},
         {"uf_max_tries", s.uf_max_tries},
         {"snapshot_m", s.snapshot_m},
         {"max_states", s.max_states},
         {"threads", s.threads},
         {"seed", s.seed}};
  if (!s.mutant.empty()) j["mutant"] = s.mutant;
  if (!sf.suite.empty()) j["suite"] = sf.suite;
  if (sf.mode == "random") j["runs"] = sf.runs;
  if (!s.roles.empty()) j["roles"] = s.roles;
  j["oracle_bounds"] = {
      {"max_behavior_events", sf.oracle_bounds.max_behavior_events},
      {"max_nodes", sf.oracle_bounds.max_nodes}};
  return j;
}

std::string verdict_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    default: return "inconclusive";
  }
}

json value_to_json(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::Bottom: return nullptr;
    case Value::Kind::Ack: return "ack";
    case Value::Kind::Int: return v.as_int();
    case Value::Kind::Tuple: {
      json arr = json::array();
      for (const Value& e : v.elems()) arr.push_back(value_to_json(e));
      return arr;
    }
  }
  return nullptr;
}

Value value_from_json(const json& j) {
  if (j.is_null()) return Value::bottom();
  if (j.is_string()) {
    if (j.get<std::string>() == "ack") return Value::ack();
    throw SchemaError("unknown value literal: " + j.get<std::string>());
  }
  if (j.is_number_integer()) return Value::integer(j.get<int64_t>());
  if (j.is_array()) {
    std::vector<Value> elems;
    for (const json& e : j) elems.push_back(value_from_json(e));
    return Value::tuple(std::move(elems));
  }
  throw SchemaError("value must be null, \"ack\", an integer or an array");
}

namespace {

std::string kind_string(Event::Kind k) {
  switch (k) {
    case Event::Kind::Invocation: return "invocation";
    case Event::Kind::Response: return "response";
    default: return "internal";
  }
}

Event::Kind kind_from_string(const std::string& s) {
  if (s == "invocation") return Event::Kind::Invocation;
  if (s == "response") return Event::Kind::Response;
  if (s == "internal") return Event::Kind::Internal;
  throw SchemaError("unknown event kind: " + s);
}

}  // namespace

json event_to_json(const Event& e) {
  json j{{"process", e.process},
         {"line", e.line},
         {"kind", kind_string(e.kind)},
         {"branch", e.branch}};
  if (e.kind == Event::Kind::Invocation) {
    j["op"] = e.op;
    j["arg"] = value_to_json(e.arg);
  }
  if (e.kind == Event::Kind::Response) j["res"] = value_to_json(e.res);
  return j;
}

Event event_from_json(const json& j) {
  require_keys(j, {"process", "line", "kind", "branch", "op", "arg", "res",
                   "pre_meta", "post_meta"},
               "event");
  Event e;
  e.process = get_required<int>(j, "process");
  e.line = get_required<int>(j, "line");
  e.kind = kind_from_string(get_required<std::string>(j, "kind"));
  e.branch = get_or<int>(j, "branch", 0);
  if (j.contains("op")) e.op = j.at("op").get<std::string>();
  if (j.contains("arg")) e.arg = value_from_json(j.at("arg"));
  if (j.contains("res")) e.res = value_from_json(j.at("res"));
  return e;
}

json report_to_json(const Report& r) {
  json events = json::array();
  for (const TraceEvent& te : r.counterexample) {
    json e = event_to_json(te.event);
    e["pre_meta"] = te.pre_meta;
    e["post_meta"] = te.post_meta;
    events.push_back(std::move(e));
  }
  return json{{"verdict", r.verdict},
              {"check", r.check},
              {"states_visited", r.states_visited},
              {"transitions", r.transitions},
              {"bounds",
               {{"max_events", r.scenario.scenario.max_events},
                {"max_states", r.scenario.scenario.max_states}}},
              {"counterexample", std::move(events)},
              {"violated_conjuncts", r.violated_conjuncts},
              {"detail", r.detail},
              {"timing", {{"seconds", r.seconds}}},
              {"scenario", scenario_file_to_json(r.scenario)}};
}

Report report_from_json(const json& j) {
  require_keys(j,
               {"verdict", "check", "states_visited", "transitions", "bounds",
                "counterexample", "violated_conjuncts", "detail", "timing",
                "scenario"},
               "report");
  Report r;
  r.verdict = get_required<std::string>(j, "verdict");
  if (r.verdict != "pass" && r.verdict != "fail" && r.verdict != "inconclusive")
    throw SchemaError("field 'verdict' must be pass, fail or inconclusive");
  r.check = get_or<std::string>(j, "check", "");
  r.states_visited = get_or<uint64_t>(j, "states_visited", 0);
  r.transitions = get_or<uint64_t>(j, "transitions", 0);
  if (j.contains("counterexample")) {
    for (const json& e : j.at("counterexample")) {
      TraceEvent te;
      te.event = event_from_json(e);
      te.pre_meta = get_or<size_t>(e, "pre_meta", 0);
      te.post_meta = get_or<size_t>(e, "post_meta", 0);
      r.counterexample.push_back(std::move(te));
    }
  }
  r.violated_conjuncts =
      get_or<std::vector<std::string>>(j, "violated_conjuncts", {});
  r.detail = get_or<std::string>(j, "detail", "");
  if (j.contains("timing"))
    r.seconds = get_or<double>(j.at("timing"), "seconds", 0.0);
  r.scenario = scenario_file_from_json(get_required<json>(j, "scenario"));
  if (r.verdict == "fail" && r.counterexample.empty() &&
      r.violated_conjuncts.empty())
    throw SchemaError("fail verdict without counterexample evidence");
  return r;
}

Report load_report(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open report file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw SchemaError("report file is not valid JSON: " + std::string(e.what()));
  }
  return report_from_json(j);
}

std::vector<TraceEvent> annotate_trace(const ScenarioInstance& inst,
                                       const std::vector<Event>& events) {
  auto run = replay_events(*inst.machine, inst.machine->initial_config(), events);
  if (!run) throw std::invalid_argument("counterexample does not replay");
  std::vector<TraceEvent> trace;
  Meta meta = inst.tracker.meta_init();
  MachineConfig pre = run->initial;
  for (size_t i = 0; i < run->steps.size(); ++i) {
    const auto& [ev, post] = run->steps[i];
    TraceEvent te;
    te.event = ev;
    te.pre_meta = meta.size();
    meta = inst.tracker.apply_line(meta, ev, pre, post);
    te.post_meta = meta.size();
    trace.push_back(std::move(te));
    pre = post;
  }
  return trace;
}

Report make_report(const ScenarioFile& sf, const ScenarioInstance& inst,
                   const ExplorationReport& er, double seconds) {
  Report r;
  r.verdict = verdict_string(er.verdict);
  r.check = property_name(er.property);
  r.states_visited = er.states_visited;
  r.transitions = er.transitions;
  r.seconds = seconds;
  r.scenario = sf;
  if (er.counterexample) {
    r.detail = er.counterexample->detail;
    r.counterexample = annotate_trace(inst, er.counterexample->events);
  }
  return r;
}

std::string render_trace(const ScenarioInstance& inst,
                         const std::vector<TraceEvent>& trace) {
  std::ostringstream out;
  for (size_t i = 0; i < trace.size(); ++i) {
    const Event& e = trace[i].event;
    out << "  #" << (i + 1) << " p" << e.process << " line " << e.line << " ";
    switch (e.kind) {
      case Event::Kind::Invocation:
        out << "invoke " << e.op << "(" << e.arg.str() << ")";
        break;
      case Event::Kind::Response:
        out << "return " << e.res.str();
        break;
      default:
        out << "step";
        if (e.branch) out << " [branch " << e.branch << "]";
        break;
    }
    out << "  |M| " << trace[i].pre_meta << " -> " << trace[i].post_meta
        << "\n";
  }
  (void)inst;
  return out.str();
}

}  // namespace lintrack
