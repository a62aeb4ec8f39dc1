#include "lintrack/oracle.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace lintrack {

bool LinStep::operator<(const LinStep& o) const {
  if (process != o.process) return process < o.process;
  if (op != o.op) return op < o.op;
  if (int c = arg.compare(o.arg)) return c < 0;
  return res.compare(o.res) < 0;
}

namespace {

// search state: how much of the behavior has been consumed, plus the
// serialized-so-far configuration
struct OracleNode {
  size_t idx = 0;
  AtomicConfiguration cfg;

  bool operator==(const OracleNode& o) const = default;
};

size_t oracle_node_hash(const OracleNode& n) {
  return hash_combine(std::hash<size_t>{}(n.idx), n.cfg.hash());
}

// moves from a node: consume the next behavior event, or let any pending
// operation take effect
template <typename Visit>
void oracle_moves(const SequentialSpec& spec, const Behavior& b,
                  const OracleNode& n, Visit&& visit) {
  if (n.idx < b.size()) {
    const Event& ev = b[n.idx];
    if (ev.kind == Event::Kind::Invocation) {
      if (n.cfg.f[ev.process].idle()) {
        OracleNode next{n.idx + 1, n.cfg};
        next.cfg.f[ev.process] =
            ProcessStatus{ev.op, ev.arg, Value::bottom()};
        visit(std::move(next), std::optional<LinStep>{});
      }
    } else if (ev.kind == Event::Kind::Response) {
      const ProcessStatus& st = n.cfg.f[ev.process];
      if (st.linearized() && st.res == ev.res) {
        OracleNode next{n.idx + 1, n.cfg};
        next.cfg.f[ev.process] = ProcessStatus{};
        visit(std::move(next), std::optional<LinStep>{});
      }
    }
  }
  for (ProcessId p = 0; p < static_cast<ProcessId>(n.cfg.f.size()); ++p) {
    const ProcessStatus& st = n.cfg.f[p];
    if (!st.pending()) continue;
    auto t = spec.delta(n.cfg.sigma, p, st.op, st.arg);
    if (!t) continue;
    OracleNode next{n.idx, n.cfg};
    next.cfg.sigma = t->state;
    next.cfg.f[p].res = t->response;
    visit(std::move(next), std::optional<LinStep>{
                               LinStep{p, st.op, st.arg, t->response}});
  }
}

struct ConfigSearch {
  Verdict verdict = Verdict::Pass;
  Meta configs;
};

// memoized reachability over (idx, configuration); collects the
// configurations seen once the whole behavior is consumed
ConfigSearch oracle_configs(const SequentialSpec& spec, const Behavior& b,
                            int num_processes, const OracleBounds& bounds,
                            bool stop_at_first) {
  ConfigSearch out;
  if (b.size() > bounds.max_behavior_events) {
    out.verdict = Verdict::BoundExceeded;
    return out;
  }

  std::unordered_map<size_t, std::vector<OracleNode>> seen;
  auto mark = [&](const OracleNode& n) {
    auto& bucket = seen[oracle_node_hash(n)];
    for (const OracleNode& o : bucket)
      if (o == n) return false;
    bucket.push_back(n);
    return true;
  };

  std::vector<OracleNode> frontier;
  OracleNode root{0, AtomicConfiguration::initial(spec.initial_state,
                                                  num_processes)};
  mark(root);
  frontier.push_back(std::move(root));
  uint64_t visited = 1;

  while (!frontier.empty()) {
    std::vector<OracleNode> next_frontier;
    for (const OracleNode& n : frontier) {
      if (n.idx == b.size()) {
        out.configs.insert(n.cfg);
        if (stop_at_first) return out;
      }
      oracle_moves(spec, b, n,
                   [&](OracleNode next, const std::optional<LinStep>&) {
                     if (!mark(next)) return;
                     ++visited;
                     next_frontier.push_back(std::move(next));
                   });
      if (visited > bounds.max_nodes) {
        out.verdict = Verdict::BoundExceeded;
        return out;
      }
    }
    frontier = std::move(next_frontier);
  }
  return out;
}

void collect_sequences(const SequentialSpec& spec, const Behavior& b,
                       const OracleNode& n, Linearization& prefix,
                       std::set<Linearization>& sequences, Meta& configs,
                       uint64_t& budget, bool& pruned) {
  if (budget == 0) {
    pruned = true;
    return;
  }
  --budget;
  if (n.idx == b.size()) {
    sequences.insert(prefix);
    configs.insert(n.cfg);
  }
  oracle_moves(spec, b, n,
               [&](OracleNode next, const std::optional<LinStep>& step) {
                 if (step) prefix.push_back(*step);
                 collect_sequences(spec, b, next, prefix, sequences, configs,
                                   budget, pruned);
                 if (step) prefix.pop_back();
               });
}

}  // namespace

OracleOutcome linearizations(const SequentialSpec& spec, const Behavior& b,
                             int num_processes, const OracleBounds& bounds) {
  OracleOutcome out;
  if (b.size() > bounds.max_behavior_events) {
    out.verdict = Verdict::BoundExceeded;
    return out;
  }
  OracleNode root{0, AtomicConfiguration::initial(spec.initial_state,
                                                  num_processes)};
  Linearization prefix;
  std::set<Linearization> sequences;
  uint64_t budget = bounds.max_nodes;
  bool pruned = false;
  collect_sequences(spec, b, root, prefix, sequences, out.configs, budget,
                    pruned);
  if (pruned) out.verdict = Verdict::BoundExceeded;
  out.linearizations.assign(sequences.begin(), sequences.end());
  return out;
}

std::optional<bool> behavior_linearizable(const SequentialSpec& spec,
                                          const Behavior& b,
                                          int num_processes,
                                          const OracleBounds& bounds) {
  ConfigSearch cs = oracle_configs(spec, b, num_processes, bounds, true);
  if (!cs.configs.empty()) return true;
  if (cs.verdict == Verdict::BoundExceeded) return std::nullopt;
  return false;
}

LemmaCheckResult lemma_check(const TrackedMachine& full,
                             const std::vector<Event>& events,
                             const OracleBounds& bounds) {
  LemmaCheckResult out;
  const StepMachine& base = full.base();

  MachineConfig cur = base.initial_config();
  Meta m = full.meta_init();
  Behavior b;
  for (const Event& ev : events) {
    std::vector<std::pair<Event, MachineConfig>> succs;
    if (cur.pc[ev.process] == StepMachine::kIdle)
      succs = base.invoke(cur, ev.process, ev.op, ev.arg);
    else
      succs = base.step(cur, ev.process);
    if (ev.branch < 0 || ev.branch >= static_cast<int>(succs.size()))
      throw std::invalid_argument("lemma_check: events do not replay");
    const MachineConfig& post = succs[ev.branch].second;
    m = full.apply_line(m, ev, cur, post);
    if (ev.kind != Event::Kind::Internal) b.push_back(ev);
    cur = post;
  }

  ConfigSearch cs =
      oracle_configs(full.spec(), b, base.num_processes(), bounds, false);
  out.oracle_verdict = cs.verdict;
  out.tracker_meta = m;
  out.oracle_meta = cs.configs;
  out.ok = cs.verdict == Verdict::Pass && m == cs.configs;
  return out;
}

namespace {

size_t behavior_hash(const Behavior& b) {
  size_t h = 0x51ab1efbu;
  for (const Event& ev : b) {
    h = hash_combine(h, std::hash<int>{}(ev.process));
    h = hash_combine(h, std::hash<int>{}(static_cast<int>(ev.kind)));
    h = hash_combine(h, std::hash<std::string>{}(ev.op));
    h = hash_combine(h, ev.arg.hash());
    h = hash_combine(h, ev.res.hash());
  }
  return h;
}

bool behavior_equal(const Behavior& a, const Behavior& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].process != b[i].process || a[i].kind != b[i].kind ||
        a[i].op != b[i].op || a[i].arg != b[i].arg || a[i].res != b[i].res)
      return false;
  return true;
}

std::string meta_str(const Meta& m) {
  std::string out = "{";
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) out += "; ";
    out += m.configs()[i].str();
  }
  return out + "}";
}

}  // namespace

LemmaSweepResult lemma_sweep(const ScenarioInstance& inst,
                             const OracleBounds& bounds) {
  LemmaSweepResult out;
  const Scenario& s = inst.scenario;

  struct SweepNode {
    TrackedState state;
    std::vector<int> budgets;
    Behavior behavior;
    std::vector<Event> path;  // full replayable event path
    int depth = 0;
  };

  auto node_hash = [](const SweepNode& n) {
    size_t h = n.state.hash();
    for (int b : n.budgets) h = hash_combine(h, std::hash<int>{}(b));
    return hash_combine(h, behavior_hash(n.behavior));
  };
  std::unordered_map<size_t, std::vector<std::pair<TrackedState,
                                                   Behavior>>> seen;
  std::unordered_map<size_t, std::vector<std::pair<Behavior, Meta>>>
      oracle_cache;

  auto mark = [&](const SweepNode& n) {
    auto& bucket = seen[node_hash(n)];
    for (auto& [st, bh] : bucket)
      if (st == n.state && behavior_equal(bh, n.behavior)) return false;
    bucket.push_back({n.state, n.behavior});
    return true;
  };

  auto oracle_meta_of = [&](const Behavior& b) -> std::pair<Verdict, Meta> {
    auto& bucket = oracle_cache[behavior_hash(b)];
    for (auto& [bh, m] : bucket)
      if (behavior_equal(bh, b)) return {Verdict::Pass, m};
    ConfigSearch cs = oracle_configs(inst.cs.spec, b,
                                     inst.machine->num_processes(), bounds,
                                     false);
    if (cs.verdict == Verdict::Pass) bucket.push_back({b, cs.configs});
    ++out.behaviors_checked;
    return {cs.verdict, cs.configs};
  };

  auto check = [&](const SweepNode& n) -> bool {  // false = stop the sweep
    ++out.nodes_checked;
    auto [verdict, oracle_m] = oracle_meta_of(n.behavior);
    if (verdict != Verdict::Pass) {
      out.verdict = Verdict::BoundExceeded;
      return false;
    }
    if (n.state.meta == oracle_m) return true;
    out.verdict = Verdict::Fail;
    out.mismatch = Counterexample{
        n.path, "tracker meta-configuration differs from the "
                "linearizations-of-behavior configurations"};
    out.tracker_meta_str = meta_str(n.state.meta);
    out.oracle_meta_str = meta_str(oracle_m);
    return false;
  };

  SweepNode root;
  root.state = inst.tracker.initial_state();
  root.budgets.assign(s.num_processes, s.max_ops_per_process);
  mark(root);
  if (!check(root)) return out;

  std::vector<SweepNode> frontier{std::move(root)};
  while (!frontier.empty()) {
    std::vector<SweepNode> next_frontier;
    for (const SweepNode& n : frontier) {
      if (n.depth >= s.max_events) continue;
      auto choices = generator_choices(*inst.machine, n.state.config,
                                       n.budgets, inst.roles,
                                       inst.cs.spec.operations);
      for (const Choice& ch : choices) {
        auto succs = ch.is_invocation
                         ? inst.tracker.invoke(n.state, ch.process, ch.op,
                                               ch.arg)
                         : inst.tracker.step(n.state, ch.process);
        for (auto& [ev, ts] : succs) {
          SweepNode child;
          child.state = std::move(ts);
          child.budgets = n.budgets;
          if (ch.is_invocation) --child.budgets[ch.process];
          child.behavior = n.behavior;
          if (ev.kind != Event::Kind::Internal) child.behavior.push_back(ev);
          child.path = n.path;
          child.path.push_back(ev);
          child.depth = n.depth + 1;
          if (!mark(child)) continue;
          if (out.nodes_checked >= bounds.max_nodes) {
            out.verdict = Verdict::BoundExceeded;
            return out;
          }
          if (!check(child)) return out;
          next_frontier.push_back(std::move(child));
        }
      }
    }
    frontier = std::move(next_frontier);
  }
  return out;
}

TreeSearchResult strong_lin_tree_search(const ScenarioInstance& inst,
                                        const OracleBounds& bounds) {
  TreeSearchResult out;
  const Scenario& s = inst.scenario;

  struct GNode {
    TrackedState state;
    std::vector<int> budgets;
    int depth = 0;
  };
  struct GEdge {
    size_t from, to;
    Event ev;
  };

  std::vector<GNode> nodes;
  std::vector<GEdge> edges;
  std::unordered_map<size_t, std::vector<size_t>> index;
  auto find_node = [&](const TrackedState& st,
                       const std::vector<int>& b) -> std::optional<size_t> {
    size_t h = st.hash();
    for (int x : b) h = hash_combine(h, std::hash<int>{}(x));
    for (size_t i : index[h])
      if (nodes[i].state == st && nodes[i].budgets == b) return i;
    return std::nullopt;
  };
  auto add_node = [&](GNode n) {
    size_t h = n.state.hash();
    for (int x : n.budgets) h = hash_combine(h, std::hash<int>{}(x));
    index[h].push_back(nodes.size());
    nodes.push_back(std::move(n));
    return nodes.size() - 1;
  };

  GNode root;
  root.state = inst.tracker.initial_state();
  root.budgets.assign(s.num_processes, s.max_ops_per_process);
  add_node(std::move(root));

  bool bound_hit = false;
  size_t head = 0;
  while (head < nodes.size()) {
    // nodes[head] may be invalidated by push_back; copy what we need
    TrackedState state = nodes[head].state;
    std::vector<int> budgets = nodes[head].budgets;
    int depth = nodes[head].depth;
    auto choices = generator_choices(*inst.machine, state.config, budgets,
                                     inst.roles, inst.cs.spec.operations);
    for (const Choice& ch : choices) {
      auto succs = ch.is_invocation
                       ? inst.tracker.invoke(state, ch.process, ch.op, ch.arg)
                       : inst.tracker.step(state, ch.process);
      for (auto& [ev, ts] : succs) {
        std::vector<int> b = budgets;
        if (ch.is_invocation) --b[ch.process];
        if (auto existing = find_node(ts, b)) {
          edges.push_back(GEdge{head, *existing, ev});
          continue;
        }
        if (depth + 1 > s.max_events || nodes.size() >= bounds.max_nodes) {
          bound_hit = true;
          continue;
        }
        GNode child;
        child.state = std::move(ts);
        child.budgets = std::move(b);
        child.depth = depth + 1;
        size_t ci = add_node(std::move(child));
        edges.push_back(GEdge{head, ci, ev});
      }
    }
    ++head;
  }
  out.nodes = nodes.size();
  out.edges = edges.size();

  // greatest fixpoint of viable label sets
  std::vector<std::vector<AtomicConfiguration>> viable(nodes.size());
  for (size_t i = 0; i < nodes.size(); ++i)
    viable[i] = nodes[i].state.meta.configs();

  std::vector<std::vector<size_t>> out_edges(nodes.size());
  for (size_t e = 0; e < edges.size(); ++e)
    out_edges[edges[e].from].push_back(e);

  bool changed = true;
  while (changed) {
    changed = false;
    ++out.prune_rounds;
    for (size_t i = 0; i < nodes.size(); ++i) {
      auto& vs = viable[i];
      auto survives = [&](const AtomicConfiguration& c) {
        Meta single;
        single.insert(c);
        for (size_t e : out_edges[i]) {
          const GEdge& edge = edges[e];
          Meta succs = inst.tracker.apply_line(single, edge.ev,
                                               nodes[i].state.config,
                                               nodes[edge.to].state.config);
          bool found = false;
          for (const AtomicConfiguration& c2 : succs) {
            if (std::find(viable[edge.to].begin(), viable[edge.to].end(),
                          c2) != viable[edge.to].end()) {
              found = true;
              break;
            }
          }
          if (!found) return false;
        }
        return true;
      };
      size_t before = vs.size();
      vs.erase(std::remove_if(vs.begin(), vs.end(),
                              [&](const AtomicConfiguration& c) {
                                return !survives(c);
                              }),
               vs.end());
      if (vs.size() != before) changed = true;
    }
  }

  if (viable[0].empty()) {
    out.verdict = Verdict::Fail;  // definite even under a pruned graph
    return out;
  }
  out.verdict = bound_hit ? Verdict::BoundExceeded : Verdict::Pass;

  out.labeling_matches_tracker = true;
  for (size_t i = 0; i < nodes.size(); ++i) {
    Meta vm(std::vector<AtomicConfiguration>(viable[i].begin(),
                                             viable[i].end()));
    if (!(vm == nodes[i].state.meta)) {
      out.labeling_matches_tracker = false;
      break;
    }
  }
  return out;
}

}  // namespace lintrack
