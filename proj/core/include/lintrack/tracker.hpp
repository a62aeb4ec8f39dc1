#ifndef LINTRACK_TRACKER_HPP
#define LINTRACK_TRACKER_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lintrack/machine.hpp"
#include "lintrack/spec.hpp"
#include "lintrack/value.hpp"

namespace lintrack {

/// Per-process status inside an atomic configuration. Exactly one of three
/// shapes: idle (op empty), pending (op set, res bottom), linearized (op set,
/// res set).
struct ProcessStatus {
  std::string op;  // empty = no operation
  Value arg;
  Value res;

  bool idle() const { return op.empty(); }
  bool pending() const { return !op.empty() && res.is_bottom(); }
  bool linearized() const { return !op.empty() && !res.is_bottom(); }

  bool operator==(const ProcessStatus& o) const = default;
  int compare(const ProcessStatus& o) const;
};

/// A final configuration of an atomic run: sequential-object state plus one
/// status per process.
struct AtomicConfiguration {
  Value sigma;
  std::vector<ProcessStatus> f;

  static AtomicConfiguration initial(const Value& sigma0, int num_processes);

  bool operator==(const AtomicConfiguration& o) const = default;
  bool operator<(const AtomicConfiguration& o) const;
  size_t hash() const;
  std::string str() const;
};

/// A finite set of atomic configurations, kept sorted and duplicate-free so
/// equality and hashing are canonical.
class Meta {
 public:
  Meta() = default;
  explicit Meta(std::vector<AtomicConfiguration> configs);

  void insert(AtomicConfiguration c);
  bool contains(const AtomicConfiguration& c) const;
  bool subset_of(const Meta& o) const;
  bool empty() const { return configs_.empty(); }
  size_t size() const { return configs_.size(); }
  const std::vector<AtomicConfiguration>& configs() const { return configs_; }
  auto begin() const { return configs_.begin(); }
  auto end() const { return configs_.end(); }

  bool operator==(const Meta& o) const = default;
  size_t hash() const;

 private:
  std::vector<AtomicConfiguration> configs_;  // sorted, unique
};

// -- the helpers of the evolution operators ----------------------------------

/// pi (idle in c) invokes op(arg): status becomes pending, sigma unchanged.
AtomicConfiguration invoke_cfg(const AtomicConfiguration& c, ProcessId pi,
                               const std::string& op, const Value& arg);

/// pi (linearized in c with response res) returns: status becomes idle.
AtomicConfiguration return_cfg(const AtomicConfiguration& c, ProcessId pi,
                               const Value& res);

/// Processes with pending operations in c.
std::vector<ProcessId> pending(const AtomicConfiguration& c);

/// Folds the transition function over c, linearizing each process of alpha in
/// order. nullopt when some application is not enabled. Every alpha element
/// must be pending in c (contract violation otherwise).
std::optional<AtomicConfiguration> delta_star(const SequentialSpec& spec,
                                              const AtomicConfiguration& c,
                                              const std::vector<ProcessId>& alpha);

// -- the three evolution operators -------------------------------------------

/// All configurations reachable by pi invoking op(arg) and then any subset of
/// pending processes linearizing in any order.
Meta evolve_inv(const SequentialSpec& spec, const Meta& m, ProcessId pi,
                const std::string& op, const Value& arg);

/// All configurations reachable by any subset of pending processes
/// linearizing in any order. Always a superset of m.
Meta evolve(const SequentialSpec& spec, const Meta& m);

/// Keeps configurations where pi has linearized with response res, applies
/// the return, then closes under linearization subsets. May be empty; an
/// empty result is the linearizability-violation signal, not a fault.
Meta evolve_ret(const SequentialSpec& spec, const Meta& m, ProcessId pi,
                const Value& res);

/// Every duplicate-free sequence over candidates (all subsets, all orders,
/// including the empty sequence).
std::vector<std::vector<ProcessId>> all_sequences(
    const std::vector<ProcessId>& candidates);

// -- tracked machines ---------------------------------------------------------

/// Context available to a linearization-rule annotation: the machine, the
/// configurations before and after the line's own code ran, and the executing
/// process.
struct RuleCtx {
  const StepMachine& machine;
  const MachineConfig& pre;
  const MachineConfig& post;
  ProcessId pi;
};

/// Data-driven per-line linearization annotation. The line's meta update is:
/// invocation lines first apply invoke_cfg, return lines first filter on the
/// response and apply return_cfg, then the annotation linearizes pending
/// operations:
///   None       - linearize the empty sequence only (identity closure)
///   AllPending - every subset of pending processes in every order (the full
///                tracker's closure)
///   SelfIf     - linearize exactly (pi) when the condition holds
///   Subsets    - every subset-permutation of a per-configuration candidate
///                list
///   Sequences  - an explicit per-configuration list of sequences
struct LinRule {
  enum class Kind { None, AllPending, SelfIf, Subsets, Sequences };
  Kind kind = Kind::None;
  std::function<bool(const RuleCtx&)> self_cond;
  std::function<std::vector<ProcessId>(const RuleCtx&,
                                       const AtomicConfiguration&)>
      candidates;
  std::function<std::vector<std::vector<ProcessId>>(
      const RuleCtx&, const AtomicConfiguration&)>
      sequences;

  static LinRule none() { return LinRule{}; }
  static LinRule all_pending() { return LinRule{Kind::AllPending, {}, {}, {}}; }
  static LinRule self_if(std::function<bool(const RuleCtx&)> cond) {
    return LinRule{Kind::SelfIf, std::move(cond), {}, {}};
  }
  static LinRule subsets(
      std::function<std::vector<ProcessId>(const RuleCtx&,
                                           const AtomicConfiguration&)> c) {
    return LinRule{Kind::Subsets, {}, std::move(c), {}};
  }
  static LinRule with_sequences(
      std::function<std::vector<std::vector<ProcessId>>(
          const RuleCtx&, const AtomicConfiguration&)> s) {
    return LinRule{Kind::Sequences, {}, {}, std::move(s)};
  }
};

/// A state of a tracked machine: the base machine configuration plus the
/// meta-configuration auxiliary.
struct TrackedState {
  MachineConfig config;
  Meta meta;

  bool operator==(const TrackedState& o) const = default;
  size_t hash() const;
};

/// A step machine augmented with per-line meta-configuration update rules.
/// Stripping the rules leaves the base machine untouched line-for-line, so
/// coupled runs share behaviors.
class TrackedMachine {
 public:
  TrackedMachine(const StepMachine* base, SequentialSpec spec)
      : base_(base), spec_(std::move(spec)) {}

  const StepMachine& base() const { return *base_; }
  const SequentialSpec& spec() const { return spec_; }

  void set_rule(int line, LinRule rule) { rules_[line] = std::move(rule); }
  const LinRule& rule(int line) const;
  std::vector<int> rule_sites() const;  // lines with a non-None rule

  /// Optional pruning predicate applied after every meta update: only
  /// configurations satisfying it are kept. Pruning keeps the update a subset
  /// of the full closure, so it preserves the partial-tracker conditions; it
  /// is how a tracker discards conjectured linearization orders the machine
  /// state has since contradicted.
  using RetainFn = std::function<bool(const StepMachine&, const MachineConfig&,
                                      const AtomicConfiguration&)>;
  void set_retain(RetainFn retain) { retain_ = std::move(retain); }
  const RetainFn& retain() const { return retain_; }

  TrackedState initial_state() const;
  Meta meta_init() const;

  /// The meta update induced by one base step (pre, event, post).
  Meta apply_line(const Meta& m, const Event& ev, const MachineConfig& pre,
                  const MachineConfig& post) const;

  /// Base step plus meta update; pi must not be idle.
  std::vector<std::pair<Event, TrackedState>> step(const TrackedState& s,
                                                   ProcessId pi) const;
  /// Invocation plus meta update; pi must be idle.
  std::vector<std::pair<Event, TrackedState>> invoke(const TrackedState& s,
                                                     ProcessId pi,
                                                     const std::string& op,
                                                     const Value& arg) const;

 private:
  Meta close_with_rule(const Meta& m, const LinRule& rule,
                       const RuleCtx& ctx) const;

  const StepMachine* base_;
  SequentialSpec spec_;
  std::map<int, LinRule> rules_;
  RetainFn retain_;
};

/// The canonical augmentation: every line evolves by the full operators, so
/// the meta-configuration tracks exactly the final configurations of all
/// linearizations of the run so far.
TrackedMachine full_tracker(const StepMachine& base,
                            const SequentialSpec& spec);

struct TrackerViolation {
  int line = 0;
  ProcessId process = 0;
  AtomicConfiguration witness;  // in the rule's output but not the full one's
  std::string detail;
};

struct ValidationReport {
  size_t checks = 0;
  std::vector<TrackerViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks the partial-tracker conditions over sampled reachable states: the
/// initialization, and per executable line, that the rule's meta update is a
/// subset of the corresponding full operator's output.
ValidationReport validate_partial(const TrackedMachine& tracked,
                                  const std::vector<TrackedState>& samples);

/// Replays the same event sequence through two trackers of one base machine
/// and checks the partial meta stays a subset of the full meta at every step.
/// Returns the first violating step index, or nullopt if domination holds.
std::optional<size_t> coupled_domination_violation(
    const TrackedMachine& partial, const TrackedMachine& full,
    const std::vector<Event>& events);

}  // namespace lintrack

template <>
struct std::hash<lintrack::AtomicConfiguration> {
  size_t operator()(const lintrack::AtomicConfiguration& c) const {
    return c.hash();
  }
};

template <>
struct std::hash<lintrack::TrackedState> {
  size_t operator()(const lintrack::TrackedState& s) const { return s.hash(); }
};

#endif
