#ifndef LINTRACK_MACHINE_HPP
#define LINTRACK_MACHINE_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lintrack/spec.hpp"
#include "lintrack/value.hpp"

namespace lintrack {

class StepMachine;

enum class LineKind { Invocation, Intermediate, Return };

/// Full configuration of a step machine: shared cells, per-process program
/// counters and local registers, plus the operation/argument each non-idle
/// process is executing. Value-semantic with structural equality/hashing.
struct MachineConfig {
  std::vector<Value> shared;
  std::vector<int> pc;  // StepMachine::kIdle when idle
  std::vector<std::vector<Value>> locals;
  std::vector<int> cur_op;  // operation index, -1 when idle
  std::vector<Value> cur_arg;

  bool operator==(const MachineConfig& o) const = default;
  size_t hash() const;
};

struct Event {
  enum class Kind { Invocation, Response, Internal };
  ProcessId process = 0;
  int line = 0;
  Kind kind = Kind::Internal;
  std::string op;  // Invocation only
  Value arg;       // Invocation only
  Value res;       // Response only
  int branch = 0;  // index of the successor taken, for deterministic replay
};

/// One nondeterministic alternative of executing a line.
struct Successor {
  MachineConfig config;
  Value response;  // set by Return lines
};

/// Context handed to a line's code: the pre-step configuration, the
/// executing process, and (for invocation lines) the bound argument.
struct StepCtx {
  const StepMachine& machine;
  const MachineConfig& in;
  ProcessId pi;
  Value arg;
};

struct LineDef {
  LineKind kind = LineKind::Intermediate;
  int op_index = -1;  // Invocation lines: which operation this line enters
  std::function<void(const StepCtx&, std::vector<Successor>&)> exec;
};

/// An implementation as numbered atomic lines over named shared base objects
/// and per-process local registers. Lines are the unit of atomicity; each
/// line mutates only shared cells and the executing process's locals.
/// Nondeterministic branches are explicit successor alternatives.
class StepMachine {
 public:
  static constexpr int kIdle = 0;

  explicit StepMachine(int num_processes) : num_processes_(num_processes) {}

  int num_processes() const { return num_processes_; }

  // -- construction ---------------------------------------------------------
  int add_shared(const std::string& name, Value init);
  int add_shared_array(const std::string& name, int len, const Value& init);
  int add_local(const std::string& name, Value init);
  int add_operation(const std::string& name, int entry_line);
  void add_line(int number, LineKind kind,
                std::function<void(const StepCtx&, std::vector<Successor>&)> exec,
                int op_index = -1);

  // -- lookup ---------------------------------------------------------------
  int shared_index(const std::string& name) const;
  std::pair<int, int> shared_array(const std::string& name) const;  // base,len
  int local_index(const std::string& name) const;
  int op_index(const std::string& name) const;
  const std::string& op_name(int index) const { return op_names_.at(index); }
  int op_entry_line(int index) const { return op_entry_.at(index); }
  size_t num_operations() const { return op_names_.size(); }
  const std::map<int, LineDef>& lines() const { return lines_; }
  LineKind classify_line(int line) const;

  // -- execution ------------------------------------------------------------
  MachineConfig initial_config() const;

  /// Executes the line at pi's pc. pi must not be idle. The successor set may
  /// be empty only when the line's transition is not enabled (the process is
  /// parked). Return lines produce Response events and reset pi to idle.
  std::vector<std::pair<Event, MachineConfig>> step(const MachineConfig& c,
                                                    ProcessId pi) const;

  /// pi (idle in c) invokes op(arg): executes the operation's invocation
  /// line, emitting the Invocation event.
  std::vector<std::pair<Event, MachineConfig>> invoke(const MachineConfig& c,
                                                      ProcessId pi,
                                                      const std::string& op,
                                                      const Value& arg) const;

  // -- config helpers for line code and predicates ---------------------------
  const Value& shared_at(const MachineConfig& c, int index) const {
    return c.shared[index];
  }
  const Value& local(const MachineConfig& c, ProcessId pi,
                     const std::string& name) const {
    return c.locals[pi][local_index(name)];
  }

 private:
  std::vector<std::pair<Event, MachineConfig>> run_line(
      const MachineConfig& c, ProcessId pi, int line, const Value& arg) const;

  int num_processes_;
  std::vector<Value> shared_init_;
  std::unordered_map<std::string, int> shared_names_;
  std::unordered_map<std::string, std::pair<int, int>> shared_arrays_;
  std::vector<Value> local_init_;
  std::unordered_map<std::string, int> local_names_;
  std::vector<std::string> op_names_;
  std::vector<int> op_entry_;
  std::map<int, LineDef> lines_;
};

/// A run: an initial configuration and an alternating event/configuration
/// sequence, one configuration per event.
struct Run {
  MachineConfig initial;
  std::vector<std::pair<Event, MachineConfig>> steps;
};

using Behavior = std::vector<Event>;

/// The subsequence of invocation and response events of a run.
Behavior behavior(const Run& run);

/// Per process, invocations and responses strictly alternate starting with
/// an invocation.
bool behavior_well_formed(const Behavior& b, int num_processes);

/// Replays a recorded event sequence from an initial configuration, choosing
/// the recorded branch at each step. Returns nullopt if any event does not
/// match a legal step.
std::optional<Run> replay_events(const StepMachine& machine,
                                 const MachineConfig& initial,
                                 const std::vector<Event>& events);

}  // namespace lintrack

template <>
struct std::hash<lintrack::MachineConfig> {
  size_t operator()(const lintrack::MachineConfig& c) const { return c.hash(); }
};

#endif
