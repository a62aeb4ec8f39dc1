#ifndef LINTRACK_CASE_STUDIES_HPP
#define LINTRACK_CASE_STUDIES_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lintrack/machine.hpp"
#include "lintrack/spec.hpp"
#include "lintrack/tracker.hpp"

namespace lintrack {

struct Mutant {
  std::string name;
  std::string description;
  std::shared_ptr<StepMachine> machine;
};

/// A named step machine with its sequential spec, an optional partial-tracker
/// construction, and named buggy variants for counterexample extraction.
struct CaseStudy {
  std::string name;
  SequentialSpec spec;
  std::shared_ptr<StepMachine> machine;
  std::function<TrackedMachine(const StepMachine&)> partial_builder;
  std::vector<Mutant> mutants;
  bool swss = false;  // generator must enforce the single-writer
                      // single-scanner constraint

  bool has_partial() const { return static_cast<bool>(partial_builder); }
  TrackedMachine partial() const { return partial_builder(*machine); }
  TrackedMachine full() const { return full_tracker(*machine, spec); }
  const Mutant* find_mutant(const std::string& mutant_name) const;
};

/// Sizing knobs shared by the case-study constructors.
struct CaseParams {
  int num_processes = 2;
  std::vector<int64_t> values = {1, 2};
  int max_total_ops = 4;  // sizes the queue's backing array
  int uf_n = 3;
  int uf_max_tries = 1;
  int snapshot_m = 2;
};

/// Two steps per operation around a trivially atomic implementation: an
/// argument-binding call, a line applying the transition function to a single
/// shared state cell (parked while not enabled), and a return that resets the
/// response register.
CaseStudy atomic_case(const SequentialSpec& spec, int num_processes,
                      const std::string& name);

/// Herlihy-Wing queue with its partial tracker (rule sites: lines 2 and 8)
/// and two buggy variants.
CaseStudy hw_queue(const CaseParams& params);

/// Jayanti-Tarjan any-try-splitting union-find with its singleton partial
/// tracker (rule sites: lines 2 and 7) and two buggy variants.
CaseStudy jt_union_find(const CaseParams& params);

/// Jayanti single-writer single-scanner snapshot with its partial tracker
/// (rule sites: lines 2 and 10) and two buggy variants.
CaseStudy jayanti_snapshot(const CaseParams& params);

/// Registry lookup by CLI name: hw-queue, jt-union-find, jayanti-snapshot,
/// atomic-queue, atomic-union-find, atomic-snapshot.
CaseStudy make_case_study(const std::string& name, const CaseParams& params);
std::vector<std::string> case_study_names();

}  // namespace lintrack

#endif
