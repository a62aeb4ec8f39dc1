#include "lintrack/explorer.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace lintrack {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::BoundExceeded: return "bound-exceeded";
  }
  return "?";
}

std::string property_name(Property p) {
  switch (p) {
    case Property::MetaNonempty: return "meta-nonempty";
    case Property::MetaSingleton: return "meta-singleton";
  }
  return "?";
}

CaseParams case_params(const Scenario& s) {
  CaseParams p;
  p.num_processes = s.num_processes;
  p.values = s.values;
  p.max_total_ops = s.num_processes * s.max_ops_per_process;
  p.uf_n = s.uf_n;
  p.uf_max_tries = s.uf_max_tries;
  p.snapshot_m = s.snapshot_m;
  return p;
}

ScenarioInstance build_scenario(const Scenario& s) {
  CaseStudy cs = make_case_study(s.case_study, case_params(s));

  std::shared_ptr<StepMachine> machine = cs.machine;
  if (!s.mutant.empty()) {
    const Mutant* m = cs.find_mutant(s.mutant);
    if (!m)
      throw std::invalid_argument("scenario: unknown mutant " + s.mutant +
                                  " of " + s.case_study);
    machine = m->machine;
  }

  std::vector<std::vector<std::string>> roles = s.roles;
  if (roles.empty() && cs.swss) {
    if (s.num_processes != 2)
      throw std::invalid_argument(
          "scenario: single-writer single-scanner default roles need exactly "
          "2 processes; give explicit roles otherwise");
    roles = {{"Write"}, {"Scan"}};
  }
  if (!roles.empty() && static_cast<int>(roles.size()) != s.num_processes)
    throw std::invalid_argument("scenario: roles must list every process");

  TrackedMachine tracker = [&] {
    if (s.tracker == "full") return full_tracker(*machine, cs.spec);
    if (s.tracker == "partial") {
      if (!cs.has_partial())
        throw std::invalid_argument("scenario: " + s.case_study +
                                    " has no partial tracker");
      return cs.partial_builder(*machine);
    }
    throw std::invalid_argument("scenario: tracker must be full or partial");
  }();

  return ScenarioInstance{s, std::move(cs), std::move(machine),
                          std::move(tracker), std::move(roles)};
}

std::vector<Choice> generator_choices(
    const StepMachine& machine, const MachineConfig& cfg,
    const std::vector<int>& budgets,
    const std::vector<std::vector<std::string>>& roles,
    const std::vector<OpSpec>& operations) {
  std::vector<Choice> out;
  for (ProcessId p = 0; p < machine.num_processes(); ++p) {
    if (cfg.pc[p] != StepMachine::kIdle) {
      out.push_back(Choice{p, false, {}, {}});
      continue;
    }
    if (budgets[p] <= 0) continue;
    for (size_t oi = 0; oi < machine.num_operations(); ++oi) {
      const std::string& op = machine.op_name(static_cast<int>(oi));
      if (!roles.empty() && !roles[p].empty() &&
          std::find(roles[p].begin(), roles[p].end(), op) == roles[p].end())
        continue;
      const OpSpec* os = nullptr;
      for (const OpSpec& o : operations)
        if (o.name == op) os = &o;
      if (!os)
        throw std::logic_error("generator: operation " + op +
                               " missing from spec");
      for (const Value& arg : os->args)
        out.push_back(Choice{p, true, op, arg});
    }
  }
  return out;
}

namespace {

struct Node {
  TrackedState state;
  std::vector<int> budgets;
  int64_t parent = -1;
  Event via;
  int depth = 0;
};

size_t node_key(const TrackedState& state, const std::vector<int>& budgets) {
  size_t h = state.hash();
  for (int b : budgets) h = hash_combine(h, std::hash<int>{}(b));
  return h;
}

std::vector<Event> path_to(const std::vector<Node>& nodes, int64_t idx) {
  std::vector<Event> events;
  for (int64_t i = idx; i >= 0 && nodes[i].parent >= 0; i = nodes[i].parent)
    events.push_back(nodes[i].via);
  std::reverse(events.begin(), events.end());
  return events;
}

std::optional<std::string> violation(const Meta& m, Property prop) {
  switch (prop) {
    case Property::MetaNonempty:
      if (m.empty()) return "meta-configuration is empty";
      return std::nullopt;
    case Property::MetaSingleton:
      if (m.size() != 1)
        return "meta-configuration has " + std::to_string(m.size()) +
               " configurations";
      return std::nullopt;
  }
  return std::nullopt;
}

struct Expansion {
  int64_t parent;
  Event via;
  TrackedState state;
  std::vector<int> budgets;
};

void expand_node(const ScenarioInstance& inst, const std::vector<Node>& nodes,
                 int64_t idx, std::vector<Expansion>& out) {
  const Node& n = nodes[idx];
  auto choices = generator_choices(*inst.machine, n.state.config, n.budgets,
                                   inst.roles, inst.cs.spec.operations);
  for (const Choice& ch : choices) {
    auto succs = ch.is_invocation
                     ? inst.tracker.invoke(n.state, ch.process, ch.op, ch.arg)
                     : inst.tracker.step(n.state, ch.process);
    for (auto& [ev, ts] : succs) {
      std::vector<int> budgets = n.budgets;
      if (ch.is_invocation) --budgets[ch.process];
      out.push_back(Expansion{idx, ev, std::move(ts), std::move(budgets)});
    }
  }
}

}  // namespace

ExplorationReport explore(const ScenarioInstance& inst, Property property) {
  const Scenario& s = inst.scenario;
  ExplorationReport report;
  report.property = property;

  std::vector<Node> nodes;
  std::unordered_map<size_t, std::vector<int64_t>> index;
  auto seen = [&](const TrackedState& st, const std::vector<int>& b) {
    for (int64_t i : index[node_key(st, b)])
      if (nodes[i].state == st && nodes[i].budgets == b) return true;
    return false;
  };

  Node root;
  root.state = inst.tracker.initial_state();
  root.budgets.assign(s.num_processes, s.max_ops_per_process);
  if (auto why = violation(root.state.meta, property)) {
    report.verdict = Verdict::Fail;
    report.states_visited = 1;
    report.counterexample = Counterexample{{}, *why + " initially"};
    return report;
  }
  index[node_key(root.state, root.budgets)].push_back(0);
  nodes.push_back(std::move(root));

  bool bound_hit = false;
  std::vector<int64_t> level{0};
  while (!level.empty()) {
    // expand the whole level (optionally in parallel), then merge
    // sequentially so dedup and the first counterexample are deterministic
    std::vector<std::vector<Expansion>> parts;
    int threads = std::max(1, s.threads);
    if (threads == 1 || level.size() < 2 * static_cast<size_t>(threads)) {
      parts.resize(1);
      for (int64_t idx : level) expand_node(inst, nodes, idx, parts[0]);
    } else {
      parts.resize(threads);
      std::vector<std::thread> workers;
      size_t chunk = (level.size() + threads - 1) / threads;
      for (int t = 0; t < threads; ++t) {
        size_t lo = t * chunk, hi = std::min(level.size(), lo + chunk);
        workers.emplace_back([&, t, lo, hi] {
          for (size_t k = lo; k < hi; ++k)
            expand_node(inst, nodes, level[k], parts[t]);
        });
      }
      for (auto& w : workers) w.join();
    }

    std::vector<int64_t> next;
    for (auto& part : parts) {
      for (Expansion& e : part) {
        ++report.transitions;
        if (auto why = violation(e.state.meta, property)) {
          std::vector<Event> events = path_to(nodes, e.parent);
          events.push_back(e.via);
          report.verdict = Verdict::Fail;
          report.states_visited = nodes.size();
          report.max_depth = nodes[e.parent].depth + 1;
          report.counterexample =
              Counterexample{std::move(events),
                             *why + " after " + std::to_string(
                                 nodes[e.parent].depth + 1) + " events"};
          return report;
        }
        if (seen(e.state, e.budgets)) {
          ++report.dedup_hits;
          continue;
        }
        int depth = nodes[e.parent].depth + 1;
        if (depth > s.max_events || nodes.size() >= s.max_states) {
          bound_hit = true;
          continue;
        }
        Node n;
        n.state = std::move(e.state);
        n.budgets = std::move(e.budgets);
        n.parent = e.parent;
        n.via = e.via;
        n.depth = depth;
        report.max_depth = std::max(report.max_depth, depth);
        index[node_key(n.state, n.budgets)].push_back(
            static_cast<int64_t>(nodes.size()));
        next.push_back(static_cast<int64_t>(nodes.size()));
        nodes.push_back(std::move(n));
      }
    }
    level = std::move(next);
  }

  report.states_visited = nodes.size();
  report.verdict = bound_hit ? Verdict::BoundExceeded : Verdict::Pass;
  return report;
}

ExplorationReport explore(const Scenario& s, Property property) {
  return explore(build_scenario(s), property);
}

ExplorationReport check_strong(const ScenarioInstance& inst) {
  return explore(inst, Property::MetaSingleton);
}

ExplorationReport check_strong(const Scenario& s) {
  return check_strong(build_scenario(s));
}

ExplorationReport random_walk(const ScenarioInstance& inst, Property property,
                              uint64_t seed) {
  const Scenario& s = inst.scenario;
  ExplorationReport report;
  report.property = property;
  std::mt19937_64 rng(seed);

  TrackedState cur = inst.tracker.initial_state();
  std::vector<int> budgets(s.num_processes, s.max_ops_per_process);
  std::vector<Event> trail;
  report.states_visited = 1;

  for (int step = 0; step < s.max_events; ++step) {
    if (auto why = violation(cur.meta, property)) {
      report.verdict = Verdict::Fail;
      report.counterexample = Counterexample{trail, *why};
      return report;
    }
    std::vector<Expansion> succ;
    auto choices = generator_choices(*inst.machine, cur.config, budgets,
                                     inst.roles, inst.cs.spec.operations);
    for (const Choice& ch : choices) {
      auto next = ch.is_invocation
                      ? inst.tracker.invoke(cur, ch.process, ch.op, ch.arg)
                      : inst.tracker.step(cur, ch.process);
      for (auto& [ev, ts] : next) {
        std::vector<int> b = budgets;
        if (ch.is_invocation) --b[ch.process];
        succ.push_back(Expansion{0, ev, std::move(ts), std::move(b)});
      }
    }
    if (succ.empty()) break;
    auto& pick = succ[std::uniform_int_distribution<size_t>(
        0, succ.size() - 1)(rng)];
    trail.push_back(pick.via);
    cur = std::move(pick.state);
    budgets = std::move(pick.budgets);
    ++report.transitions;
    ++report.states_visited;
    report.max_depth = step + 1;
  }

  if (auto why = violation(cur.meta, property)) {
    report.verdict = Verdict::Fail;
    report.counterexample = Counterexample{trail, *why};
    return report;
  }
  report.verdict = Verdict::Pass;
  return report;
}

std::vector<TrackedState> reachable_states(const ScenarioInstance& inst,
                                           size_t max_samples) {
  const Scenario& s = inst.scenario;
  std::vector<Node> nodes;
  std::unordered_map<size_t, std::vector<int64_t>> index;
  auto seen = [&](const TrackedState& st, const std::vector<int>& b) {
    for (int64_t i : index[node_key(st, b)])
      if (nodes[i].state == st && nodes[i].budgets == b) return true;
    return false;
  };

  Node root;
  root.state = inst.tracker.initial_state();
  root.budgets.assign(s.num_processes, s.max_ops_per_process);
  index[node_key(root.state, root.budgets)].push_back(0);
  nodes.push_back(std::move(root));

  size_t head = 0;
  while (head < nodes.size() && nodes.size() < max_samples) {
    std::vector<Expansion> out;
    expand_node(inst, nodes, static_cast<int64_t>(head), out);
    for (Expansion& e : out) {
      int depth = nodes[e.parent].depth + 1;
      if (depth > s.max_events) continue;
      if (seen(e.state, e.budgets)) continue;
      if (nodes.size() >= max_samples) break;
      Node n;
      n.state = std::move(e.state);
      n.budgets = std::move(e.budgets);
      n.parent = e.parent;
      n.depth = depth;
      index[node_key(n.state, n.budgets)].push_back(
          static_cast<int64_t>(nodes.size()));
      nodes.push_back(std::move(n));
    }
    ++head;
  }

  std::vector<TrackedState> states;
  states.reserve(nodes.size());
  for (Node& n : nodes) states.push_back(std::move(n.state));
  return states;
}

}  // namespace lintrack
