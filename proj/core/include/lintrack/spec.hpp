#ifndef LINTRACK_SPEC_HPP
#define LINTRACK_SPEC_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lintrack/value.hpp"

namespace lintrack {

using ProcessId = int;

/// One operation of a sequential object type: its name and finite argument
/// domain. Argument-free operations use the singleton domain {bottom}.
struct OpSpec {
  std::string name;
  std::vector<Value> args;
};

/// Result of one transition-function application: successor state and
/// response.
struct Transition {
  Value state;
  Value response;
};

/// A sequential object type: states, operations with finite argument
/// domains, responses, and a possibly-partial deterministic transition
/// function. An application on which the transition function is undefined
/// (e.g. dequeue on the empty queue) yields nullopt rather than a fault.
struct SequentialSpec {
  std::string name;
  Value initial_state;
  std::vector<OpSpec> operations;

  /// (state, process, op, arg) -> (state', res), or nullopt when not enabled.
  std::function<std::optional<Transition>(const Value&, ProcessId,
                                          const std::string&, const Value&)>
      delta;

  const OpSpec* find_op(const std::string& op) const {
    for (const auto& o : operations)
      if (o.name == op) return &o;
    return nullptr;
  }
};

}  // namespace lintrack

#endif
