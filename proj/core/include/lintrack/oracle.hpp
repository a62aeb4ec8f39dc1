#ifndef LINTRACK_ORACLE_HPP
#define LINTRACK_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lintrack/explorer.hpp"
#include "lintrack/machine.hpp"
#include "lintrack/spec.hpp"
#include "lintrack/tracker.hpp"

namespace lintrack {

/// Budgets for the brute-force searches. The defaults fit desk-scale
/// scenarios; both are configurable from the CLI.
struct OracleBounds {
  size_t max_behavior_events = 12;
  uint64_t max_nodes = 200'000;
};

/// One step of a linearization: which process's operation took effect, and
/// the response the transition function produced.
struct LinStep {
  ProcessId process = 0;
  std::string op;
  Value arg;
  Value res;

  bool operator==(const LinStep& o) const = default;
  bool operator<(const LinStep& o) const;
};

using Linearization = std::vector<LinStep>;

struct OracleOutcome {
  Verdict verdict = Verdict::Pass;  // BoundExceeded when max_nodes pruned
  std::vector<Linearization> linearizations;
  Meta configs;  // final configurations, one per linearization class
};

/// Brute-force search over all ways to serialize a behavior: every completed
/// operation takes effect between its invocation and response with the
/// observed response; pending operations may take effect or not. Built
/// directly on the sequential transition function, independent of the
/// meta-configuration evolution operators.
OracleOutcome linearizations(const SequentialSpec& spec, const Behavior& b,
                             int num_processes,
                             const OracleBounds& bounds = {});

/// True iff the behavior has at least one linearization. nullopt when the
/// bound pruned the search before any was found.
std::optional<bool> behavior_linearizable(const SequentialSpec& spec,
                                          const Behavior& b,
                                          int num_processes,
                                          const OracleBounds& bounds = {});

/// Compares the tracker meta-configuration after replaying a run against the
/// final configurations of the behavior's linearizations.
struct LemmaCheckResult {
  bool ok = false;
  Verdict oracle_verdict = Verdict::Pass;
  Meta tracker_meta;
  Meta oracle_meta;
};
LemmaCheckResult lemma_check(const TrackedMachine& full,
                             const std::vector<Event>& events,
                             const OracleBounds& bounds = {});

/// Exhaustively checks the meta/linearizations equality at every reachable
/// (state, behavior) class of a scenario's full-tracked machine.
struct LemmaSweepResult {
  Verdict verdict = Verdict::Pass;  // Fail on the first mismatch
  uint64_t nodes_checked = 0;
  uint64_t behaviors_checked = 0;
  std::optional<Counterexample> mismatch;
  std::string tracker_meta_str;
  std::string oracle_meta_str;
};
LemmaSweepResult lemma_sweep(const ScenarioInstance& inst,
                             const OracleBounds& bounds = {});

/// Decides strong linearizability by searching for a prefix-consistent
/// labeling of the scenario's run tree: every node gets one atomic
/// configuration, the root gets the initial one, and each child's label
/// extends its parent's along the step. Computed as a greatest fixpoint of
/// viable label sets over the deduplicated state graph.
struct TreeSearchResult {
  Verdict verdict = Verdict::Pass;  // Pass = a labeling exists
  uint64_t nodes = 0;
  uint64_t edges = 0;
  uint64_t prune_rounds = 0;
  // when a labeling exists: true iff every node's viable set coincides with
  // the tracker's meta-configuration
  bool labeling_matches_tracker = false;
};
TreeSearchResult strong_lin_tree_search(const ScenarioInstance& inst,
                                        const OracleBounds& bounds = {});

}  // namespace lintrack

#endif
