#ifndef LINTRACK_EXPLORER_HPP
#define LINTRACK_EXPLORER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lintrack/case_studies.hpp"
#include "lintrack/machine.hpp"
#include "lintrack/tracker.hpp"

namespace lintrack {

/// A bounded closed-system workload: which implementation, which tracker,
/// how many processes, how many operations each may issue, and the
/// exploration budgets.
struct Scenario {
  std::string case_study;          // registry name, see case_study_names()
  std::string mutant;              // empty = the correct implementation
  std::string tracker = "full";    // "full" or "partial"
  int num_processes = 2;
  int max_ops_per_process = 2;
  std::vector<int64_t> values = {1, 2};
  int uf_n = 3;
  int uf_max_tries = 1;
  int snapshot_m = 2;
  int max_events = 12;             // exploration depth, counted in steps
  uint64_t max_states = 4'000'000;
  int threads = 1;                 // parallel frontier expansion when > 1
  uint64_t seed = 1;               // random walks only
  // allowed operation names per process; empty = every operation
  // (single-writer single-scanner scenarios default to Write/Scan roles)
  std::vector<std::vector<std::string>> roles;
};

/// A scenario resolved against the registry: the (possibly mutant) machine,
/// the requested tracker, and the effective per-process roles.
struct ScenarioInstance {
  Scenario scenario;
  CaseStudy cs;
  std::shared_ptr<StepMachine> machine;
  TrackedMachine tracker;
  std::vector<std::vector<std::string>> roles;
};

ScenarioInstance build_scenario(const Scenario& s);

/// One enabled scheduler choice at a configuration: either invoke op(arg) on
/// an idle process (consuming budget) or step a busy one.
struct Choice {
  ProcessId process = 0;
  bool is_invocation = false;
  std::string op;
  Value arg;
};

/// All enabled choices under the operation budgets and role restrictions.
std::vector<Choice> generator_choices(
    const StepMachine& machine, const MachineConfig& cfg,
    const std::vector<int>& budgets,
    const std::vector<std::vector<std::string>>& roles,
    const std::vector<OpSpec>& operations);

enum class Verdict { Pass, Fail, BoundExceeded };
std::string verdict_name(Verdict v);

enum class Property { MetaNonempty, MetaSingleton };
std::string property_name(Property p);

struct Counterexample {
  std::vector<Event> events;  // replayable from the initial configuration
  std::string detail;
};

struct ExplorationReport {
  Verdict verdict = Verdict::Pass;
  Property property = Property::MetaNonempty;
  uint64_t states_visited = 0;
  uint64_t transitions = 0;
  uint64_t dedup_hits = 0;
  int max_depth = 0;
  std::optional<Counterexample> counterexample;
};

/// Breadth-first exhaustive exploration of the tracked machine under the
/// scenario's budgets, deduplicating on (machine configuration, meta,
/// remaining budgets). Checks the property at every reachable state; a BFS
/// counterexample is minimal in events. Pass means the reachable space
/// closed; BoundExceeded means max_events or max_states pruned it.
ExplorationReport explore(const ScenarioInstance& inst, Property property);
ExplorationReport explore(const Scenario& s, Property property);

/// explore with the meta-singleton property (the strong-linearizability
/// check).
ExplorationReport check_strong(const ScenarioInstance& inst);
ExplorationReport check_strong(const Scenario& s);

/// A single random schedule of at most scenario.max_events steps, checking
/// the property along the way. Deterministic in scenario.seed.
ExplorationReport random_walk(const ScenarioInstance& inst, Property property,
                              uint64_t seed);

/// Depth-limited collection of reachable tracked states (with dedup), for
/// sampling-based validation.
std::vector<TrackedState> reachable_states(const ScenarioInstance& inst,
                                           size_t max_samples);

CaseParams case_params(const Scenario& s);

}  // namespace lintrack

#endif
