#include "lintrack/machine.hpp"

#include <stdexcept>

namespace lintrack {

size_t MachineConfig::hash() const {
  size_t h = 0x8f1bbcdcu;
  for (const Value& v : shared) h = hash_combine(h, v.hash());
  for (int p : pc) h = hash_combine(h, std::hash<int>{}(p));
  for (const auto& regs : locals)
    for (const Value& v : regs) h = hash_combine(h, v.hash());
  for (int o : cur_op) h = hash_combine(h, std::hash<int>{}(o));
  for (const Value& v : cur_arg) h = hash_combine(h, v.hash());
  return h;
}

int StepMachine::add_shared(const std::string& name, Value init) {
  int idx = static_cast<int>(shared_init_.size());
  shared_init_.push_back(std::move(init));
  shared_names_[name] = idx;
  return idx;
}

int StepMachine::add_shared_array(const std::string& name, int len,
                                  const Value& init) {
  int base = static_cast<int>(shared_init_.size());
  for (int i = 0; i < len; ++i) shared_init_.push_back(init);
  shared_arrays_[name] = {base, len};
  return base;
}

int StepMachine::add_local(const std::string& name, Value init) {
  int idx = static_cast<int>(local_init_.size());
  local_init_.push_back(std::move(init));
  local_names_[name] = idx;
  return idx;
}

int StepMachine::add_operation(const std::string& name, int entry_line) {
  op_names_.push_back(name);
  op_entry_.push_back(entry_line);
  return static_cast<int>(op_names_.size()) - 1;
}

void StepMachine::add_line(
    int number, LineKind kind,
    std::function<void(const StepCtx&, std::vector<Successor>&)> exec,
    int op_index) {
  if (number == kIdle || lines_.count(number))
    throw std::invalid_argument("StepMachine: bad or duplicate line number");
  lines_[number] = LineDef{kind, op_index, std::move(exec)};
}

int StepMachine::shared_index(const std::string& name) const {
  auto it = shared_names_.find(name);
  if (it == shared_names_.end())
    throw std::invalid_argument("StepMachine: unknown shared cell " + name);
  return it->second;
}

std::pair<int, int> StepMachine::shared_array(const std::string& name) const {
  auto it = shared_arrays_.find(name);
  if (it == shared_arrays_.end())
    throw std::invalid_argument("StepMachine: unknown shared array " + name);
  return it->second;
}

int StepMachine::local_index(const std::string& name) const {
  auto it = local_names_.find(name);
  if (it == local_names_.end())
    throw std::invalid_argument("StepMachine: unknown local register " + name);
  return it->second;
}

int StepMachine::op_index(const std::string& name) const {
  for (size_t i = 0; i < op_names_.size(); ++i)
    if (op_names_[i] == name) return static_cast<int>(i);
  throw std::invalid_argument("StepMachine: unknown operation " + name);
}

LineKind StepMachine::classify_line(int line) const {
  auto it = lines_.find(line);
  if (it == lines_.end())
    throw std::invalid_argument("StepMachine: unknown line number " +
                                std::to_string(line));
  return it->second.kind;
}

MachineConfig StepMachine::initial_config() const {
  MachineConfig c;
  c.shared = shared_init_;
  c.pc.assign(num_processes_, kIdle);
  c.locals.assign(num_processes_, local_init_);
  c.cur_op.assign(num_processes_, -1);
  c.cur_arg.assign(num_processes_, Value::bottom());
  return c;
}

std::vector<std::pair<Event, MachineConfig>> StepMachine::run_line(
    const MachineConfig& c, ProcessId pi, int line, const Value& arg) const {
  auto it = lines_.find(line);
  if (it == lines_.end())
    throw std::logic_error("StepMachine: pc points at unknown line " +
                           std::to_string(line));
  const LineDef& def = it->second;

  std::vector<Successor> succs;
  StepCtx ctx{*this, c, pi, arg};
  def.exec(ctx, succs);

  std::vector<std::pair<Event, MachineConfig>> out;
  out.reserve(succs.size());
  int branch = 0;
  for (Successor& s : succs) {
    Event ev;
    ev.process = pi;
    ev.line = line;
    ev.branch = branch++;
    switch (def.kind) {
      case LineKind::Invocation:
        ev.kind = Event::Kind::Invocation;
        ev.op = op_names_[def.op_index];
        ev.arg = arg;
        break;
      case LineKind::Return:
        ev.kind = Event::Kind::Response;
        ev.res = s.response;
        s.config.pc[pi] = kIdle;
        s.config.cur_op[pi] = -1;
        s.config.cur_arg[pi] = Value::bottom();
        break;
      case LineKind::Intermediate:
        ev.kind = Event::Kind::Internal;
        break;
    }
    out.emplace_back(std::move(ev), std::move(s.config));
  }
  return out;
}

std::vector<std::pair<Event, MachineConfig>> StepMachine::step(
    const MachineConfig& c, ProcessId pi) const {
  if (c.pc[pi] == kIdle)
    throw std::logic_error("StepMachine::step: process is idle");
  return run_line(c, pi, c.pc[pi], c.cur_arg[pi]);
}

std::vector<std::pair<Event, MachineConfig>> StepMachine::invoke(
    const MachineConfig& c, ProcessId pi, const std::string& op,
    const Value& arg) const {
  if (c.pc[pi] != kIdle)
    throw std::logic_error("StepMachine::invoke: process is not idle");
  int oi = op_index(op);
  MachineConfig pre = c;
  pre.cur_op[pi] = oi;
  pre.cur_arg[pi] = arg;
  return run_line(pre, pi, op_entry_[oi], arg);
}

Behavior behavior(const Run& run) {
  Behavior b;
  for (const auto& [ev, cfg] : run.steps)
    if (ev.kind != Event::Kind::Internal) b.push_back(ev);
  return b;
}

bool behavior_well_formed(const Behavior& b, int num_processes) {
  std::vector<bool> active(num_processes, false);
  for (const Event& ev : b) {
    if (ev.process < 0 || ev.process >= num_processes) return false;
    if (ev.kind == Event::Kind::Invocation) {
      if (active[ev.process]) return false;
      active[ev.process] = true;
    } else if (ev.kind == Event::Kind::Response) {
      if (!active[ev.process]) return false;
      active[ev.process] = false;
    } else {
      return false;
    }
  }
  return true;
}

std::optional<Run> replay_events(const StepMachine& machine,
                                 const MachineConfig& initial,
                                 const std::vector<Event>& events) {
  Run run;
  run.initial = initial;
  MachineConfig cur = initial;
  for (const Event& ev : events) {
    std::vector<std::pair<Event, MachineConfig>> succs;
    if (cur.pc[ev.process] == StepMachine::kIdle) {
      if (ev.kind != Event::Kind::Invocation) return std::nullopt;
      succs = machine.invoke(cur, ev.process, ev.op, ev.arg);
    } else {
      succs = machine.step(cur, ev.process);
    }
    if (ev.branch < 0 || ev.branch >= static_cast<int>(succs.size()))
      return std::nullopt;
    auto& [got, next] = succs[ev.branch];
    if (got.line != ev.line || got.kind != ev.kind) return std::nullopt;
    cur = next;
    run.steps.emplace_back(got, cur);
  }
  return run;
}

}  // namespace lintrack
