#include "lintrack/invariants.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace lintrack {

namespace {

// lazy per-machine views over the named registers the conjuncts read

struct QueueView {
  int X, qbase, qlen;
  int li, lv, ll, lj, lx;
  int enq, deq;

  explicit QueueView(const StepMachine& m)
      : X(m.shared_index("X")),
        qbase(m.shared_array("Q").first),
        qlen(m.shared_array("Q").second),
        li(m.local_index("i")),
        lv(m.local_index("v")),
        ll(m.local_index("l")),
        lj(m.local_index("j")),
        lx(m.local_index("x")),
        enq(m.op_index("Enqueue")),
        deq(m.op_index("Dequeue")) {}

  int64_t x_val(const MachineConfig& c) const { return c.shared[X].as_int(); }
  const Value& q(const MachineConfig& c, int64_t k) const {
    if (k < 1 || k > qlen)
      throw std::invalid_argument("queue predicate: slot out of range");
    return c.shared[qbase + k - 1];
  }
  int64_t loc_int(const MachineConfig& c, ProcessId p, int l) const {
    return c.locals[p][l].as_int();
  }
};

bool contains64(const std::vector<int64_t>& xs, int64_t x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

}  // namespace

bool good_enq_set(const StepMachine& m, const MachineConfig& c,
                  const std::vector<int64_t>& A) {
  QueueView q(m);
  int64_t X = q.x_val(c);
  for (int64_t k : A)
    if (k < 1 || k > X - 1)
      throw std::invalid_argument("good_enq_set: A must be a subset of [X-1]");
  for (int64_t k = 1; k <= X - 1; ++k) {
    bool nonempty = !q.q(c, k).is_bottom();
    bool in_a = contains64(A, k);
    if (nonempty && !in_a) return false;
    if (!nonempty && in_a) {
      bool claimed = false;
      for (ProcessId p = 0; p < m.num_processes(); ++p)
        if (c.pc[p] == 3 && q.loc_int(c, p, q.li) == k) claimed = true;
      if (!claimed) return false;
    }
  }
  return true;
}

bool good_res(const StepMachine& m, const MachineConfig& c,
              const std::vector<int64_t>& A, const AtomicConfiguration& C) {
  QueueView q(m);
  for (ProcessId p = 0; p < m.num_processes(); ++p) {
    Value expected = Value::bottom();
    if (c.pc[p] == 3 && contains64(A, q.loc_int(c, p, q.li)))
      expected = Value::ack();
    else if (c.pc[p] == 4)
      expected = Value::ack();
    else if (c.pc[p] == 9)
      expected = c.locals[p][q.lx];
    if (C.f[p].res != expected) return false;
  }
  return true;
}

bool values_match_inds(const StepMachine& m, const MachineConfig& c,
                       const std::vector<int64_t>& s,
                       const AtomicConfiguration& C) {
  QueueView q(m);
  std::vector<Value> alpha;
  for (int64_t slot : s) {
    const Value& stored = q.q(c, slot);
    if (!stored.is_bottom()) {
      alpha.push_back(stored);
      continue;
    }
    const Value* claimant = nullptr;
    for (ProcessId p = 0; p < m.num_processes(); ++p)
      if (c.pc[p] == 3 && q.loc_int(c, p, q.li) == slot)
        claimant = &c.locals[p][q.lv];
    if (!claimant)
      throw std::invalid_argument(
          "values_match_inds: empty slot in s has no line-3 claimant");
    alpha.push_back(*claimant);
  }
  return C.sigma == Value::tuple(std::move(alpha));
}

bool j_inv_seq(const StepMachine& m, const MachineConfig& c,
               const std::vector<int64_t>& s) {
  QueueView q(m);
  for (size_t n = 0; n < s.size(); ++n) {
    for (size_t mm = n + 1; mm < s.size(); ++mm) {
      if (s[mm] >= s[n] || q.q(c, s[mm]).is_bottom()) continue;
      bool justified = false;
      for (ProcessId p = 0; p < m.num_processes(); ++p)
        if (c.pc[p] == 8 && s[n] < q.loc_int(c, p, q.ll) &&
            s[mm] < q.loc_int(c, p, q.lj))
          justified = true;
      if (!justified) return false;
    }
  }
  return true;
}

namespace {

struct SnapshotView {
  int X, abase, alen, bbase;
  int li, lv, lj, la;
  int write_op, scan_op;

  explicit SnapshotView(const StepMachine& m)
      : X(m.shared_index("X")),
        abase(m.shared_array("A").first),
        alen(m.shared_array("A").second),
        bbase(m.shared_array("B").first),
        li(m.local_index("i")),
        lv(m.local_index("v")),
        lj(m.local_index("j")),
        la(m.local_index("a")),
        write_op(m.op_index("Write")),
        scan_op(m.op_index("Scan")) {}

  // the unique active scanner, or -1
  ProcessId scanner(const StepMachine& m, const MachineConfig& c) const {
    ProcessId s = -1;
    for (ProcessId p = 0; p < m.num_processes(); ++p) {
      if (c.pc[p] >= 7 && c.pc[p] <= 12) {
        if (s >= 0)
          throw std::invalid_argument(
              "snapshot predicate: more than one active scanner");
        s = p;
      }
    }
    return s;
  }

  bool writer_at_forward(const StepMachine& m, const MachineConfig& c,
                         int64_t k) const {
    for (ProcessId p = 0; p < m.num_processes(); ++p)
      if (c.pc[p] == 4 && c.locals[p][li].as_int() == k) return true;
    return false;
  }
};

void push_unique(std::vector<Value>& xs, Value v) {
  if (std::find(xs.begin(), xs.end(), v) == xs.end()) xs.push_back(std::move(v));
}

}  // namespace

std::vector<Value> snapshot_kth_return_set(const StepMachine& m,
                                           const MachineConfig& c, int k) {
  SnapshotView v(m);
  if (k < 0 || k >= v.alen)
    throw std::invalid_argument("snapshot predicate: component out of range");
  const Value& A = c.shared[v.abase + k];
  const Value& B = c.shared[v.bbase + k];
  ProcessId s = v.scanner(m, c);

  std::vector<Value> out;
  if (s < 0 || c.pc[s] == 7) {
    push_unique(out, A);
    return out;
  }
  int64_t j = c.locals[s][v.lj].as_int();
  const Value& as_k = c.locals[s][v.la].at(k);
  switch (c.pc[s]) {
    case 8:
      push_unique(out, A);
      if (k < j && !B.is_bottom()) push_unique(out, B);
      return out;
    case 9:
      push_unique(out, A);
      if (!B.is_bottom())
        push_unique(out, B);
      else if (k < j)
        push_unique(out, as_k);
      return out;
    case 10:
      push_unique(out, A);
      if (!B.is_bottom())
        push_unique(out, B);
      else
        push_unique(out, as_k);
      return out;
    case 11: {
      bool wb = v.writer_at_forward(m, c, k);
      if (k >= j && wb && !B.is_bottom()) {
        push_unique(out, A);
        push_unique(out, B);
      } else if (k >= j && wb && B.is_bottom()) {
        push_unique(out, A);
        push_unique(out, as_k);
      } else if (k >= j && !wb && !B.is_bottom()) {
        push_unique(out, B);
      } else {
        push_unique(out, as_k);
      }
      return out;
    }
    case 12:
      push_unique(out, as_k);
      return out;
    default:
      throw std::logic_error("snapshot predicate: unexpected scanner pc");
  }
}

// -- queue suite ---------------------------------------------------------------

namespace {

bool queue_type_shapes(const StepMachine& m, const TrackedState& s) {
  QueueView q(m);
  const MachineConfig& c = s.config;
  if (!c.shared[q.X].is_int() || q.x_val(c) < 1) return false;
  for (int64_t k = 1; k <= q.qlen; ++k) {
    const Value& cell = q.q(c, k);
    if (!cell.is_bottom() && !cell.is_int()) return false;
  }
  for (const AtomicConfiguration& C : s.meta) {
    if (!C.sigma.is_tuple()) return false;
    for (const Value& item : C.sigma.elems())
      if (!item.is_int()) return false;
  }
  return true;
}

bool queue_unused_slots_empty(const StepMachine& m, const TrackedState& s) {
  QueueView q(m);
  int64_t X = q.x_val(s.config);
  for (int64_t k = X; k <= q.qlen; ++k)
    if (!q.q(s.config, k).is_bottom()) return false;
  return true;
}

bool queue_pending_before_site(const StepMachine& m, const TrackedState& s) {
  QueueView q(m);
  const MachineConfig& c = s.config;
  for (ProcessId p = 0; p < m.num_processes(); ++p) {
    bool must_be_pending =
        c.pc[p] == 2 || c.pc[p] == 6 || c.pc[p] == 7 || c.pc[p] == 8;
    if (!must_be_pending) continue;
    const std::string& op = m.op_name(c.cur_op[p]);
    for (const AtomicConfiguration& C : s.meta)
      if (!C.f[p].pending() || C.f[p].op != op || C.f[p].arg != c.cur_arg[p])
        return false;
  }
  return true;
}

bool queue_reserved_index_valid(const StepMachine& m, const TrackedState& s) {
  QueueView q(m);
  const MachineConfig& c = s.config;
  int64_t X = q.x_val(c);
  for (ProcessId p = 0; p < m.num_processes(); ++p) {
    if (c.pc[p] != 3 && c.pc[p] != 4) continue;
    int64_t i = q.loc_int(c, p, q.li);
    if (i < 1 || i > X - 1) return false;
    if (c.pc[p] == 3 && !q.q(c, i).is_bottom()) return false;
    for (ProcessId p2 = 0; p2 < m.num_processes(); ++p2)
      if (p2 != p && (c.pc[p2] == 3 || c.pc[p2] == 4) &&
          q.loc_int(c, p2, q.li) == i)
        return false;
  }
  return true;
}

bool queue_scan_bounds(const StepMachine& m, const TrackedState& s) {
  QueueView q(m);
  const MachineConfig& c = s.config;
  int64_t X = q.x_val(c);
  for (ProcessId p = 0; p < m.num_processes(); ++p) {
    if (c.pc[p] == 8) {
      int64_t l = q.loc_int(c, p, q.ll);
      int64_t j = q.loc_int(c, p, q.lj);
      if (l < 2 || l > X) return false;
      if (j < 1 || j > l - 1) return false;
    }
    if (c.pc[p] == 7) {
      int64_t l = q.loc_int(c, p, q.ll);
      if (l < 1 || l > X) return false;
    }
  }
  return true;
}

bool queue_found_element(const StepMachine& m, const TrackedState& s) {
  QueueView q(m);
  const MachineConfig& c = s.config;
  for (ProcessId p = 0; p < m.num_processes(); ++p)
    if (c.pc[p] == 9 && c.locals[p][q.lx].is_bottom()) return false;
  return true;
}

// the existential witness: some slot order explains some tracked
// configuration's state and responses while justifying its inversions
bool queue_good_witness(const StepMachine& m, const TrackedState& s) {
  QueueView q(m);
  const MachineConfig& c = s.config;
  int64_t X = q.x_val(c);
  std::vector<ProcessId> slots;
  for (int64_t k = 1; k <= X - 1; ++k) slots.push_back(static_cast<int>(k));
  for (const auto& seq : all_sequences(slots)) {
    std::vector<int64_t> sseq(seq.begin(), seq.end());
    std::vector<int64_t> A = sseq;
    std::sort(A.begin(), A.end());
    if (!good_enq_set(m, c, A)) continue;
    if (!j_inv_seq(m, c, sseq)) continue;
    for (const AtomicConfiguration& C : s.meta)
      if (good_res(m, c, A, C) && values_match_inds(m, c, sseq, C))
        return true;
  }
  return false;
}

}  // namespace

PredicateSuite hw_queue_suite() {
  PredicateSuite suite;
  suite.name = "hw-queue-inv";
  suite.case_study = "hw-queue";
  suite.conjuncts = {
      {"meta-nonempty",
       [](const StepMachine&, const TrackedState& s) { return !s.meta.empty(); }},
      {"type-shapes", queue_type_shapes},
      {"unused-slots-empty", queue_unused_slots_empty},
      {"pending-before-site", queue_pending_before_site},
      {"reserved-index-valid", queue_reserved_index_valid},
      {"scan-bounds", queue_scan_bounds},
      {"found-element-nonempty", queue_found_element},
      {"good-linearization-witness", queue_good_witness},
  };
  return suite;
}

// -- union-find suite ----------------------------------------------------------

namespace {

struct UfView {
  int par = -1;  // base of the contiguous parent cells
  int n = 0;
  int lu, lv, la;
  int find_op, unite_op;

  explicit UfView(const StepMachine& m)
      : lu(m.local_index("u")),
        lv(m.local_index("v")),
        la(m.local_index("a")),
        find_op(m.op_index("Find")),
        unite_op(m.op_index("Unite")) {
    par = m.shared_index("par1");
    n = 1;
    while (true) {
      try {
        m.shared_index("par" + std::to_string(n + 1));
        ++n;
      } catch (const std::invalid_argument&) {
        break;
      }
    }
  }

  int64_t parent(const MachineConfig& c, int64_t z) const {
    return c.shared[par + z - 1].as_int();
  }
};

bool uf_parent_in_range(const StepMachine& m, const TrackedState& s) {
  UfView v(m);
  for (int64_t z = 1; z <= v.n; ++z) {
    int64_t p = v.parent(s.config, z);
    if (p < 1 || p > v.n) return false;
  }
  return true;
}

bool uf_parent_monotone(const StepMachine& m, const TrackedState& s) {
  UfView v(m);
  for (int64_t z = 1; z <= v.n; ++z)
    if (v.parent(s.config, z) < z) return false;
  return true;
}

bool uf_parent_same_part(const StepMachine& m, const TrackedState& s) {
  UfView v(m);
  for (const AtomicConfiguration& C : s.meta)
    for (int64_t z = 1; z <= v.n; ++z)
      if (C.sigma.at(z - 1) != C.sigma.at(v.parent(s.config, z) - 1))
        return false;
  return true;
}

bool uf_distinct_roots_distinct_parts(const StepMachine& m,
                                      const TrackedState& s) {
  UfView v(m);
  for (const AtomicConfiguration& C : s.meta)
    for (int64_t z = 1; z <= v.n; ++z)
      for (int64_t w = z + 1; w <= v.n; ++w)
        if (v.parent(s.config, z) == z && v.parent(s.config, w) == w &&
            C.sigma.at(z - 1) == C.sigma.at(w - 1))
          return false;
  return true;
}

bool uf_root_is_canon(const StepMachine& m, const TrackedState& s) {
  UfView v(m);
  for (const AtomicConfiguration& C : s.meta)
    for (int64_t z = 1; z <= v.n; ++z)
      if (v.parent(s.config, z) == z && C.sigma.at(z - 1) != Value::integer(z))
        return false;
  return true;
}

bool uf_find_in_progress(const StepMachine& m, const TrackedState& s) {
  UfView v(m);
  const MachineConfig& c = s.config;
  for (ProcessId p = 0; p < m.num_processes(); ++p) {
    if (c.pc[p] != 2 && c.pc[p] != 4 && c.pc[p] != 5) continue;
    int64_t x = c.cur_arg[p].as_int();
    int64_t u = c.locals[p][v.lu].as_int();
    for (const AtomicConfiguration& C : s.meta) {
      if (!C.f[p].pending() || C.f[p].op != "Find") return false;
      if (C.sigma.at(u - 1) != C.sigma.at(x - 1)) return false;
    }
  }
  return true;
}

bool uf_find_linearized(const StepMachine& m, const TrackedState& s) {
  UfView v(m);
  const MachineConfig& c = s.config;
  for (ProcessId p = 0; p < m.num_processes(); ++p) {
    if (c.pc[p] != 3) continue;
    for (const AtomicConfiguration& C : s.meta)
      if (C.f[p].res != c.locals[p][v.lu]) return false;
  }
  return true;
}

bool uf_unite_in_progress(const StepMachine& m, const TrackedState& s) {
  UfView v(m);
  const MachineConfig& c = s.config;
  for (ProcessId p = 0; p < m.num_processes(); ++p) {
    if (c.pc[p] < 7 || c.pc[p] > 13) continue;
    int64_t x = c.cur_arg[p].at(0).as_int();
    int64_t y = c.cur_arg[p].at(1).as_int();
    int64_t u = c.locals[p][v.lu].as_int();
    int64_t w = c.locals[p][v.lv].as_int();
    for (const AtomicConfiguration& C : s.meta) {
      if (!C.f[p].pending() || C.f[p].op != "Unite") return false;
      if (C.sigma.at(u - 1) != C.sigma.at(x - 1)) return false;
      if (C.sigma.at(w - 1) != C.sigma.at(y - 1)) return false;
    }
  }
  return true;
}

bool uf_unite_linearized(const StepMachine& m, const TrackedState& s) {
  const MachineConfig& c = s.config;
  for (ProcessId p = 0; p < m.num_processes(); ++p) {
    if (c.pc[p] != 14) continue;
    for (const AtomicConfiguration& C : s.meta)
      if (C.f[p].res != Value::ack()) return false;
  }
  return true;
}

}  // namespace

PredicateSuite union_find_suite() {
  PredicateSuite suite;
  suite.name = "uf-inv";
  suite.case_study = "jt-union-find";
  suite.conjuncts = {
      {"meta-singleton",
       [](const StepMachine&, const TrackedState& s) { return s.meta.size() == 1; }},
      {"meta-nonempty",
       [](const StepMachine&, const TrackedState& s) { return !s.meta.empty(); }},
      {"parent-in-range", uf_parent_in_range},
      {"parent-monotone", uf_parent_monotone},
      {"parent-same-part", uf_parent_same_part},
      {"distinct-roots-distinct-parts", uf_distinct_roots_distinct_parts},
      {"root-is-canon", uf_root_is_canon},
      {"find-in-progress", uf_find_in_progress},
      {"find-linearized", uf_find_linearized},
      {"unite-in-progress", uf_unite_in_progress},
      {"unite-linearized", uf_unite_linearized},
  };
  return suite;
}

// -- snapshot suite --------------------------------------------------------------

namespace {

bool snap_type_shapes(const StepMachine& m, const TrackedState& s) {
  SnapshotView v(m);
  const MachineConfig& c = s.config;
  int64_t x = c.shared[v.X].as_int();
  if (x != 0 && x != 1) return false;
  for (int k = 0; k < v.alen; ++k) {
    if (!c.shared[v.abase + k].is_int()) return false;
    const Value& b = c.shared[v.bbase + k];
    if (!b.is_bottom() && !b.is_int()) return false;
  }
  return true;
}

bool snap_swss(const StepMachine& m, const TrackedState& s) {
  SnapshotView v(m);
  const MachineConfig& c = s.config;
  int scanners = 0;
  std::vector<int64_t> write_targets;
  for (ProcessId p = 0; p < m.num_processes(); ++p) {
    if (c.pc[p] == StepMachine::kIdle) continue;
    if (c.cur_op[p] == v.scan_op) {
      ++scanners;
    } else {
      int64_t i = c.locals[p][v.li].as_int();
      if (contains64(write_targets, i)) return false;
      write_targets.push_back(i);
    }
  }
  return scanners <= 1;
}

bool snap_kth_membership(const StepMachine& m, const TrackedState& s) {
  SnapshotView v(m);
  const MachineConfig& c = s.config;
  ProcessId sc = v.scanner(m, c);
  for (int k = 0; k < v.alen; ++k) {
    std::vector<Value> allowed = snapshot_kth_return_set(m, c, k);
    bool before_down = sc < 0 || c.pc[sc] <= 10;
    for (const AtomicConfiguration& C : s.meta) {
      if (before_down) {
        if (std::find(allowed.begin(), allowed.end(), C.sigma.at(k)) ==
            allowed.end())
          return false;
      } else {
        const Value& res = C.f[sc].res;
        if (!res.is_tuple()) return false;
        if (std::find(allowed.begin(), allowed.end(), res.at(k)) ==
            allowed.end())
          return false;
      }
    }
  }
  return true;
}

bool snap_writer_status(const StepMachine& m, const TrackedState& s) {
  SnapshotView v(m);
  const MachineConfig& c = s.config;
  for (ProcessId p = 0; p < m.num_processes(); ++p) {
    if (c.pc[p] == StepMachine::kIdle || c.cur_op[p] != v.write_op) continue;
    for (const AtomicConfiguration& C : s.meta) {
      if (c.pc[p] == 2) {
        if (!C.f[p].pending()) return false;
      } else {  // pc 3..5: the store has landed, so the write took effect
        if (C.f[p].res != Value::ack()) return false;
      }
    }
  }
  return true;
}

bool snap_scan_linearized_after_down(const StepMachine& m,
                                     const TrackedState& s) {
  SnapshotView v(m);
  const MachineConfig& c = s.config;
  ProcessId sc = v.scanner(m, c);
  if (sc < 0 || c.pc[sc] < 11) return true;
  for (const AtomicConfiguration& C : s.meta)
    if (!C.f[sc].linearized() || !C.f[sc].res.is_tuple()) return false;
  return true;
}

}  // namespace

PredicateSuite snapshot_suite() {
  PredicateSuite suite;
  suite.name = "snapshot-inv";
  suite.case_study = "jayanti-snapshot";
  suite.conjuncts = {
      {"meta-nonempty",
       [](const StepMachine&, const TrackedState& s) { return !s.meta.empty(); }},
      {"single-scanner-distinct-writers", snap_swss},
      {"type-shapes", snap_type_shapes},
      {"kth-return-membership", snap_kth_membership},
      {"writer-status", snap_writer_status},
      {"scan-linearized-after-down", snap_scan_linearized_after_down},
  };
  return suite;
}

// -- evaluation ------------------------------------------------------------------

PredicateSuite suite_by_name(const std::string& name) {
  if (name == "hw-queue-inv") return hw_queue_suite();
  if (name == "uf-inv") return union_find_suite();
  if (name == "snapshot-inv") return snapshot_suite();
  throw std::invalid_argument("unknown predicate suite: " + name);
}

std::vector<std::string> suite_names() {
  return {"hw-queue-inv", "uf-inv", "snapshot-inv"};
}

std::vector<std::string> failed_conjuncts(const PredicateSuite& suite,
                                          const StepMachine& m,
                                          const TrackedState& s) {
  std::vector<std::string> out;
  for (const Conjunct& c : suite.conjuncts)
    if (!c.holds(m, s)) out.push_back(c.name);
  return out;
}

SuiteReport run_suite(const PredicateSuite& suite,
                      const ScenarioInstance& inst) {
  if (suite.case_study != inst.cs.name)
    throw std::invalid_argument("suite " + suite.name +
                                " does not apply to " + inst.cs.name);
  const Scenario& sc = inst.scenario;
  SuiteReport report;

  struct Node {
    TrackedState state;
    std::vector<int> budgets;
    int64_t parent = -1;
    Event via;
    int depth = 0;
    bool ok = true;
  };
  std::vector<Node> nodes;
  std::unordered_map<size_t, std::vector<int64_t>> index;
  auto key = [](const TrackedState& st, const std::vector<int>& b) {
    size_t h = st.hash();
    for (int x : b) h = hash_combine(h, std::hash<int>{}(x));
    return h;
  };
  auto seen = [&](const TrackedState& st, const std::vector<int>& b) {
    for (int64_t i : index[key(st, b)])
      if (nodes[i].state == st && nodes[i].budgets == b) return true;
    return false;
  };

  Node root;
  root.state = inst.tracker.initial_state();
  root.budgets.assign(sc.num_processes, sc.max_ops_per_process);
  {
    auto bad = failed_conjuncts(suite, *inst.machine, root.state);
    ++report.states_checked;
    if (!bad.empty()) {
      report.verdict = Verdict::Fail;
      report.violated = std::move(bad);
      report.counterexample = Counterexample{{}, "suite fails initially"};
      return report;
    }
  }
  index[key(root.state, root.budgets)].push_back(0);
  nodes.push_back(std::move(root));

  bool bound_hit = false;
  size_t head = 0;
  while (head < nodes.size()) {
    TrackedState state = nodes[head].state;
    std::vector<int> budgets = nodes[head].budgets;
    int depth = nodes[head].depth;
    bool pre_ok = nodes[head].ok;

    auto choices = generator_choices(*inst.machine, state.config, budgets,
                                     inst.roles, inst.cs.spec.operations);
    for (const Choice& ch : choices) {
      auto succs = ch.is_invocation
                       ? inst.tracker.invoke(state, ch.process, ch.op, ch.arg)
                       : inst.tracker.step(state, ch.process);
      for (auto& [ev, ts] : succs) {
        ++report.transitions_checked;
        std::vector<int> b = budgets;
        if (ch.is_invocation) --b[ch.process];
        if (seen(ts, b)) continue;
        int d = depth + 1;
        if (d > sc.max_events || nodes.size() >= sc.max_states) {
          bound_hit = true;
          continue;
        }
        auto bad = failed_conjuncts(suite, *inst.machine, ts);
        ++report.states_checked;
        if (!bad.empty()) {
          std::vector<Event> events;
          for (int64_t i = static_cast<int64_t>(head);
               i >= 0 && nodes[i].parent >= 0; i = nodes[i].parent)
            events.push_back(nodes[i].via);
          std::reverse(events.begin(), events.end());
          events.push_back(ev);
          report.verdict = Verdict::Fail;
          report.violated = std::move(bad);
          report.pre_state_held = pre_ok;
          report.counterexample =
              Counterexample{std::move(events), "suite conjunct fails"};
          return report;
        }
        Node n;
        n.state = std::move(ts);
        n.budgets = std::move(b);
        n.parent = static_cast<int64_t>(head);
        n.via = ev;
        n.depth = d;
        index[key(n.state, n.budgets)].push_back(
            static_cast<int64_t>(nodes.size()));
        nodes.push_back(std::move(n));
      }
    }
    ++head;
  }

  report.verdict = bound_hit ? Verdict::BoundExceeded : Verdict::Pass;
  return report;
}

}  // namespace lintrack
