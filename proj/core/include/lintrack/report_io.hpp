#ifndef LINTRACK_REPORT_IO_HPP
#define LINTRACK_REPORT_IO_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "lintrack/explorer.hpp"
#include "lintrack/machine.hpp"
#include "lintrack/oracle.hpp"

namespace lintrack {

/// Thrown on malformed scenario or report documents; the message names the
/// offending field.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A parsed scenario document: the exploration scenario plus the check mode
/// and its mode-specific knobs.
struct ScenarioFile {
  Scenario scenario;
  std::string mode = "explore";  // explore | strong | random | suite
  std::string suite;             // required when mode == "suite"
  uint64_t runs = 1;             // random mode only
  OracleBounds oracle_bounds;
};

ScenarioFile scenario_file_from_json(const nlohmann::json& j);
ScenarioFile load_scenario_file(const std::string& path);
nlohmann::json scenario_file_to_json(const ScenarioFile& s);

/// One counterexample event together with the meta-configuration sizes
/// around it.
struct TraceEvent {
  Event event;
  size_t pre_meta = 0;
  size_t post_meta = 0;
};

struct Report {
  std::string verdict;  // pass | fail | inconclusive
  std::string check;    // what was checked, e.g. "meta-nonempty"
  uint64_t states_visited = 0;
  uint64_t transitions = 0;
  std::vector<TraceEvent> counterexample;
  std::vector<std::string> violated_conjuncts;
  std::string detail;
  double seconds = 0.0;
  ScenarioFile scenario;  // echoed so a report is replayable on its own
};

std::string verdict_string(Verdict v);

nlohmann::json value_to_json(const Value& v);
Value value_from_json(const nlohmann::json& j);
nlohmann::json event_to_json(const Event& e);
Event event_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
Report load_report(const std::string& path);

/// Annotates counterexample events with pre/post meta sizes by replaying them
/// through the scenario's tracker.
std::vector<TraceEvent> annotate_trace(const ScenarioInstance& inst,
                                       const std::vector<Event>& events);

/// Builds the report for an exploration outcome.
Report make_report(const ScenarioFile& sf, const ScenarioInstance& inst,
                   const ExplorationReport& er, double seconds);

/// Human-readable trace rendering: per event the line number, the event kind,
/// and the meta-configuration size it leaves behind.
std::string render_trace(const ScenarioInstance& inst,
                         const std::vector<TraceEvent>& trace);

}  // namespace lintrack

#endif
