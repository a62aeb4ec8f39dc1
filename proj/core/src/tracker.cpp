#include "lintrack/tracker.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lintrack {

int ProcessStatus::compare(const ProcessStatus& o) const {
  if (op != o.op) return op < o.op ? -1 : 1;
  if (int c = arg.compare(o.arg)) return c;
  return res.compare(o.res);
}

AtomicConfiguration AtomicConfiguration::initial(const Value& sigma0,
                                                 int num_processes) {
  AtomicConfiguration c;
  c.sigma = sigma0;
  c.f.assign(num_processes, ProcessStatus{});
  return c;
}

bool AtomicConfiguration::operator<(const AtomicConfiguration& o) const {
  if (int c = sigma.compare(o.sigma)) return c < 0;
  for (size_t i = 0; i < f.size() && i < o.f.size(); ++i)
    if (int c = f[i].compare(o.f[i])) return c < 0;
  return f.size() < o.f.size();
}

size_t AtomicConfiguration::hash() const {
  size_t h = sigma.hash();
  for (const ProcessStatus& s : f) {
    h = hash_combine(h, std::hash<std::string>{}(s.op));
    h = hash_combine(h, s.arg.hash());
    h = hash_combine(h, s.res.hash());
  }
  return h;
}

std::string AtomicConfiguration::str() const {
  std::ostringstream out;
  out << "sigma=" << sigma.str() << " f=[";
  for (size_t i = 0; i < f.size(); ++i) {
    if (i) out << " ";
    if (f[i].idle())
      out << "idle";
    else
      out << f[i].op << "(" << f[i].arg.str() << ")->" << f[i].res.str();
  }
  out << "]";
  return out.str();
}

Meta::Meta(std::vector<AtomicConfiguration> configs)
    : configs_(std::move(configs)) {
  std::sort(configs_.begin(), configs_.end());
  configs_.erase(std::unique(configs_.begin(), configs_.end()),
                 configs_.end());
}

void Meta::insert(AtomicConfiguration c) {
  auto it = std::lower_bound(configs_.begin(), configs_.end(), c);
  if (it == configs_.end() || !(*it == c)) configs_.insert(it, std::move(c));
}

bool Meta::contains(const AtomicConfiguration& c) const {
  return std::binary_search(configs_.begin(), configs_.end(), c);
}

bool Meta::subset_of(const Meta& o) const {
  return std::includes(o.configs_.begin(), o.configs_.end(), configs_.begin(),
                       configs_.end());
}

size_t Meta::hash() const {
  size_t h = 0x2545f491u;
  for (const AtomicConfiguration& c : configs_) h = hash_combine(h, c.hash());
  return h;
}

AtomicConfiguration invoke_cfg(const AtomicConfiguration& c, ProcessId pi,
                               const std::string& op, const Value& arg) {
  if (!c.f[pi].idle())
    throw std::logic_error("invoke_cfg: process is not idle");
  AtomicConfiguration out = c;
  out.f[pi] = ProcessStatus{op, arg, Value::bottom()};
  return out;
}

AtomicConfiguration return_cfg(const AtomicConfiguration& c, ProcessId pi,
                               const Value& res) {
  if (!c.f[pi].linearized() || c.f[pi].res != res)
    throw std::logic_error("return_cfg: process has not linearized with res");
  AtomicConfiguration out = c;
  out.f[pi] = ProcessStatus{};
  return out;
}

std::vector<ProcessId> pending(const AtomicConfiguration& c) {
  std::vector<ProcessId> out;
  for (size_t i = 0; i < c.f.size(); ++i)
    if (c.f[i].pending()) out.push_back(static_cast<ProcessId>(i));
  return out;
}

std::optional<AtomicConfiguration> delta_star(
    const SequentialSpec& spec, const AtomicConfiguration& c,
    const std::vector<ProcessId>& alpha) {
  AtomicConfiguration cur = c;
  for (ProcessId pi : alpha) {
    if (!cur.f[pi].pending())
      throw std::logic_error("delta_star: process is not pending");
    auto t = spec.delta(cur.sigma, pi, cur.f[pi].op, cur.f[pi].arg);
    if (!t) return std::nullopt;
    cur.sigma = t->state;
    cur.f[pi].res = t->response;
  }
  return cur;
}

std::vector<std::vector<ProcessId>> all_sequences(
    const std::vector<ProcessId>& candidates) {
  std::vector<std::vector<ProcessId>> out{{}};
  // grows every sequence by every unused candidate; yields all
  // subset-permutations
  size_t begin = 0;
  while (begin < out.size()) {
    size_t end = out.size();
    for (size_t i = begin; i < end; ++i) {
      for (ProcessId c : candidates) {
        const auto& seq = out[i];
        if (std::find(seq.begin(), seq.end(), c) != seq.end()) continue;
        std::vector<ProcessId> ext = seq;
        ext.push_back(c);
        out.push_back(std::move(ext));
      }
    }
    begin = end;
  }
  return out;
}

namespace {

void close_all_pending(const SequentialSpec& spec,
                       const AtomicConfiguration& c, Meta& out) {
  for (const auto& alpha : all_sequences(pending(c)))
    if (auto r = delta_star(spec, c, alpha)) out.insert(std::move(*r));
}

}  // namespace

Meta evolve_inv(const SequentialSpec& spec, const Meta& m, ProcessId pi,
                const std::string& op, const Value& arg) {
  Meta out;
  for (const AtomicConfiguration& c : m)
    close_all_pending(spec, invoke_cfg(c, pi, op, arg), out);
  return out;
}

Meta evolve(const SequentialSpec& spec, const Meta& m) {
  Meta out;
  for (const AtomicConfiguration& c : m) close_all_pending(spec, c, out);
  return out;
}

Meta evolve_ret(const SequentialSpec& spec, const Meta& m, ProcessId pi,
                const Value& res) {
  Meta out;
  for (const AtomicConfiguration& c : m) {
    if (!c.f[pi].linearized() || c.f[pi].res != res) continue;
    close_all_pending(spec, return_cfg(c, pi, res), out);
  }
  return out;
}

size_t TrackedState::hash() const {
  return hash_combine(config.hash(), meta.hash());
}

const LinRule& TrackedMachine::rule(int line) const {
  static const LinRule kNone = LinRule::none();
  auto it = rules_.find(line);
  return it == rules_.end() ? kNone : it->second;
}

std::vector<int> TrackedMachine::rule_sites() const {
  std::vector<int> out;
  for (const auto& [line, rule] : rules_)
    if (rule.kind != LinRule::Kind::None) out.push_back(line);
  return out;
}

Meta TrackedMachine::meta_init() const {
  Meta m;
  m.insert(AtomicConfiguration::initial(spec_.initial_state,
                                        base_->num_processes()));
  return m;
}

TrackedState TrackedMachine::initial_state() const {
  return TrackedState{base_->initial_config(), meta_init()};
}

Meta TrackedMachine::close_with_rule(const Meta& m, const LinRule& rule,
                                     const RuleCtx& ctx) const {
  switch (rule.kind) {
    case LinRule::Kind::None:
      return m;
    case LinRule::Kind::AllPending:
      return evolve(spec_, m);
    case LinRule::Kind::SelfIf: {
      if (!rule.self_cond(ctx)) return m;
      Meta out;
      for (const AtomicConfiguration& c : m) {
        if (c.f[ctx.pi].pending()) {
          if (auto r = delta_star(spec_, c, {ctx.pi})) out.insert(std::move(*r));
        } else {
          out.insert(c);  // already linearized in this configuration
        }
      }
      return out;
    }
    case LinRule::Kind::Subsets: {
      Meta out;
      for (const AtomicConfiguration& c : m)
        for (const auto& alpha : all_sequences(rule.candidates(ctx, c)))
          if (auto r = delta_star(spec_, c, alpha)) out.insert(std::move(*r));
      return out;
    }
    case LinRule::Kind::Sequences: {
      Meta out;
      for (const AtomicConfiguration& c : m)
        for (const auto& alpha : rule.sequences(ctx, c))
          if (auto r = delta_star(spec_, c, alpha)) out.insert(std::move(*r));
      return out;
    }
  }
  return m;
}

Meta TrackedMachine::apply_line(const Meta& m, const Event& ev,
                                const MachineConfig& pre,
                                const MachineConfig& post) const {
  RuleCtx ctx{*base_, pre, post, ev.process};
  const LinRule& r = rule(ev.line);
  auto prune = [&](Meta out) {
    if (!retain_) return out;
    Meta kept;
    for (const AtomicConfiguration& c : out)
      if (retain_(*base_, post, c)) kept.insert(c);
    return kept;
  };
  switch (ev.kind) {
    case Event::Kind::Invocation: {
      Meta invoked;
      for (const AtomicConfiguration& c : m)
        invoked.insert(invoke_cfg(c, ev.process, ev.op, ev.arg));
      return prune(close_with_rule(invoked, r, ctx));
    }
    case Event::Kind::Internal:
      return prune(close_with_rule(m, r, ctx));
    case Event::Kind::Response: {
      Meta returned;
      for (const AtomicConfiguration& c : m) {
        if (!c.f[ev.process].linearized() || c.f[ev.process].res != ev.res)
          continue;
        returned.insert(return_cfg(c, ev.process, ev.res));
      }
      return prune(close_with_rule(returned, r, ctx));
    }
  }
  return m;
}

std::vector<std::pair<Event, TrackedState>> TrackedMachine::step(
    const TrackedState& s, ProcessId pi) const {
  std::vector<std::pair<Event, TrackedState>> out;
  for (auto& [ev, post] : base_->step(s.config, pi)) {
    Meta m = apply_line(s.meta, ev, s.config, post);
    out.emplace_back(ev, TrackedState{std::move(post), std::move(m)});
  }
  return out;
}

std::vector<std::pair<Event, TrackedState>> TrackedMachine::invoke(
    const TrackedState& s, ProcessId pi, const std::string& op,
    const Value& arg) const {
  std::vector<std::pair<Event, TrackedState>> out;
  for (auto& [ev, post] : base_->invoke(s.config, pi, op, arg)) {
    Meta m = apply_line(s.meta, ev, s.config, post);
    out.emplace_back(ev, TrackedState{std::move(post), std::move(m)});
  }
  return out;
}

TrackedMachine full_tracker(const StepMachine& base,
                            const SequentialSpec& spec) {
  for (size_t i = 0; i < base.num_operations(); ++i)
    if (!spec.find_op(base.op_name(static_cast<int>(i))))
      throw std::invalid_argument("full_tracker: machine operation " +
                                  base.op_name(static_cast<int>(i)) +
                                  " not in sequential spec");
  TrackedMachine t(&base, spec);
  for (const auto& [line, def] : base.lines())
    t.set_rule(line, LinRule::all_pending());
  return t;
}

namespace {

void check_subset(const TrackedMachine& partial, const TrackedMachine& full,
                  const Meta& m, const Event& ev, const MachineConfig& pre,
                  const MachineConfig& post, ValidationReport& report) {
  Meta got = partial.apply_line(m, ev, pre, post);
  Meta allowed = full.apply_line(m, ev, pre, post);
  ++report.checks;
  if (got.subset_of(allowed)) return;
  for (const AtomicConfiguration& c : got) {
    if (!allowed.contains(c)) {
      report.violations.push_back(TrackerViolation{
          ev.line, ev.process, c,
          "rule output escapes the full operator's output"});
      return;
    }
  }
}

}  // namespace

ValidationReport validate_partial(const TrackedMachine& tracked,
                                  const std::vector<TrackedState>& samples) {
  ValidationReport report;
  TrackedMachine full = full_tracker(tracked.base(), tracked.spec());

  if (!(tracked.meta_init() == full.meta_init())) {
    report.violations.push_back(
        TrackerViolation{0, 0, AtomicConfiguration{},
                         "meta-configuration initialization mismatch"});
  }

  const StepMachine& base = tracked.base();
  const SequentialSpec& spec = tracked.spec();
  for (const TrackedState& s : samples) {
    for (ProcessId pi = 0; pi < base.num_processes(); ++pi) {
      if (s.config.pc[pi] == StepMachine::kIdle) {
        for (const OpSpec& op : spec.operations)
          for (const Value& arg : op.args)
            for (auto& [ev, post] : base.invoke(s.config, pi, op.name, arg))
              check_subset(tracked, full, s.meta, ev, s.config, post, report);
      } else {
        for (auto& [ev, post] : base.step(s.config, pi))
          check_subset(tracked, full, s.meta, ev, s.config, post, report);
      }
      if (!report.violations.empty()) return report;
    }
  }
  return report;
}

std::optional<size_t> coupled_domination_violation(
    const TrackedMachine& partial, const TrackedMachine& full,
    const std::vector<Event>& events) {
  const StepMachine& base = partial.base();
  MachineConfig cur = base.initial_config();
  Meta mp = partial.meta_init();
  Meta mf = full.meta_init();
  if (!mp.subset_of(mf)) return 0;
  for (size_t k = 0; k < events.size(); ++k) {
    const Event& ev = events[k];
    std::vector<std::pair<Event, MachineConfig>> succs;
    if (cur.pc[ev.process] == StepMachine::kIdle)
      succs = base.invoke(cur, ev.process, ev.op, ev.arg);
    else
      succs = base.step(cur, ev.process);
    if (ev.branch < 0 || ev.branch >= static_cast<int>(succs.size()))
      return k;
    const MachineConfig& post = succs[ev.branch].second;
    mp = partial.apply_line(mp, ev, cur, post);
    mf = full.apply_line(mf, ev, cur, post);
    if (!mp.subset_of(mf)) return k + 1;
    cur = post;
  }
  return std::nullopt;
}

}  // namespace lintrack
