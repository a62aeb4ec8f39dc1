#ifndef LINTRACK_INVARIANTS_HPP
#define LINTRACK_INVARIANTS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lintrack/explorer.hpp"
#include "lintrack/machine.hpp"
#include "lintrack/tracker.hpp"

namespace lintrack {

/// One named conjunct of an inductive-invariant suite, evaluated over a
/// tracked state (machine configuration plus meta-configuration).
struct Conjunct {
  std::string name;
  std::function<bool(const StepMachine&, const TrackedState&)> holds;
};

struct PredicateSuite {
  std::string name;
  std::string case_study;  // the machine family the conjuncts read
  std::vector<Conjunct> conjuncts;
};

// -- the queue's auxiliary predicates -----------------------------------------

/// A can stand for the linearized-enqueue slot set: every nonempty slot in
/// [X-1] is in A, and every empty slot in A is claimed by a process at line 3.
/// A must be a subset of [X-1].
bool good_enq_set(const StepMachine& m, const MachineConfig& c,
                  const std::vector<int64_t>& A);

/// C's response fields match the linearizations conjectured by A: ack at
/// line 3 with a claimed slot in A, ack at line 4, the read value at line 9,
/// bottom otherwise.
bool good_res(const StepMachine& m, const MachineConfig& c,
              const std::vector<int64_t>& A, const AtomicConfiguration& C);

/// C's state is the value sequence the slot order s conjectures: the stored
/// value, or the line-3 claimant's argument for a still-empty slot.
bool values_match_inds(const StepMachine& m, const MachineConfig& c,
                       const std::vector<int64_t>& s,
                       const AtomicConfiguration& C);

/// Every inversion in s (a later, smaller, nonempty slot) is justified by a
/// dequeuer at line 8 whose scan has passed it.
bool j_inv_seq(const StepMachine& m, const MachineConfig& c,
               const std::vector<int64_t>& s);

// -- the snapshot's auxiliary predicate ---------------------------------------

/// The valid values for component k of the object state before the scanner's
/// line 10 and of the scanner's response after it, per the scanner's pc.
std::vector<Value> snapshot_kth_return_set(const StepMachine& m,
                                           const MachineConfig& c, int k);

// -- suites -------------------------------------------------------------------

PredicateSuite hw_queue_suite();
PredicateSuite union_find_suite();
PredicateSuite snapshot_suite();

/// hw-queue-inv, uf-inv, snapshot-inv.
PredicateSuite suite_by_name(const std::string& name);
std::vector<std::string> suite_names();

/// Names of the conjuncts that fail at the given state.
std::vector<std::string> failed_conjuncts(const PredicateSuite& suite,
                                          const StepMachine& m,
                                          const TrackedState& s);

struct SuiteReport {
  Verdict verdict = Verdict::Pass;
  uint64_t states_checked = 0;
  uint64_t transitions_checked = 0;
  std::vector<std::string> violated;  // at the first failing state
  std::optional<Counterexample> counterexample;
  // true when the failing transition started from a state satisfying the
  // suite (i.e. the failure is an inductiveness break, not an unreachable
  // assumption)
  bool pre_state_held = false;
};

/// Sweeps the scenario's reachable tracked states, checking every conjunct
/// at every state and across every transition. The scenario must use the
/// partial tracker (the suites constrain its meta-configuration).
SuiteReport run_suite(const PredicateSuite& suite,
                      const ScenarioInstance& inst);

}  // namespace lintrack

#endif
