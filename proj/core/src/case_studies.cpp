#include "lintrack/case_studies.hpp"

#include <algorithm>
#include <stdexcept>

#include "lintrack/invariants.hpp"
#include "lintrack/seq_types.hpp"

namespace lintrack {

namespace {

Successor succ(MachineConfig c) { return Successor{std::move(c), Value()}; }
Successor succ(MachineConfig c, Value resp) {
  return Successor{std::move(c), std::move(resp)};
}

}  // namespace

const Mutant* CaseStudy::find_mutant(const std::string& mutant_name) const {
  for (const Mutant& m : mutants)
    if (m.name == mutant_name) return &m;
  return nullptr;
}

// -- atomic implementations ---------------------------------------------------

CaseStudy atomic_case(const SequentialSpec& spec, int num_processes,
                      const std::string& name) {
  auto machine = std::make_shared<StepMachine>(num_processes);
  machine->add_local("r", Value::bottom());
  int r = machine->local_index("r");
  int state = machine->add_shared("state", spec.initial_state);

  std::vector<int> delta_lines;
  for (size_t oi = 0; oi < spec.operations.size(); ++oi) {
    const std::string op = spec.operations[oi].name;
    int inv = static_cast<int>(3 * oi) + 1;
    int del = inv + 1;
    int ret = inv + 2;
    int op_idx = machine->add_operation(op, inv);

    machine->add_line(
        inv, LineKind::Invocation,
        [del](const StepCtx& ctx, std::vector<Successor>& out) {
          MachineConfig c = ctx.in;
          c.pc[ctx.pi] = del;
          out.push_back(succ(std::move(c)));
        },
        op_idx);

    auto delta = spec.delta;
    machine->add_line(
        del, LineKind::Intermediate,
        [delta, op, state, r, ret](const StepCtx& ctx,
                                   std::vector<Successor>& out) {
          auto t = delta(ctx.in.shared[state], ctx.pi, op,
                         ctx.in.cur_arg[ctx.pi]);
          if (!t) return;  // not enabled: parked
          MachineConfig c = ctx.in;
          c.shared[state] = t->state;
          c.locals[ctx.pi][r] = t->response;
          c.pc[ctx.pi] = ret;
          out.push_back(succ(std::move(c)));
        });
    delta_lines.push_back(del);

    machine->add_line(ret, LineKind::Return,
                      [r](const StepCtx& ctx, std::vector<Successor>& out) {
                        MachineConfig c = ctx.in;
                        Value resp = c.locals[ctx.pi][r];
                        c.locals[ctx.pi][r] = Value::bottom();
                        out.push_back(succ(std::move(c), std::move(resp)));
                      });
  }

  CaseStudy cs;
  cs.name = name;
  cs.spec = spec;
  cs.machine = machine;
  SequentialSpec spec_copy = spec;
  cs.partial_builder = [spec_copy, delta_lines](const StepMachine& base) {
    TrackedMachine t(&base, spec_copy);
    for (int line : delta_lines)
      t.set_rule(line, LinRule::self_if([](const RuleCtx&) { return true; }));
    return t;
  };
  return cs;
}

// -- array-backed queue -------------------------------------------------------

namespace {

enum class QueueVariant { Standard, DequeueNoSwap, DequeueScanBackwards };

std::shared_ptr<StepMachine> queue_machine(const CaseParams& params,
                                           QueueVariant variant) {
  int capacity = params.max_total_ops;
  auto m = std::make_shared<StepMachine>(params.num_processes);
  int X = m->add_shared("X", Value::integer(1));
  int Q = m->add_shared_array("Q", capacity, Value::bottom());
  m->add_local("i", Value::bottom());
  m->add_local("v", Value::bottom());
  m->add_local("l", Value::bottom());
  m->add_local("j", Value::bottom());
  m->add_local("x", Value::bottom());
  int li = m->local_index("i"), lv = m->local_index("v");
  int ll = m->local_index("l"), lj = m->local_index("j");
  int lx = m->local_index("x");

  int enq = m->add_operation("Enqueue", 1);
  int deq = m->add_operation("Dequeue", 5);

  m->add_line(
      1, LineKind::Invocation,
      [lv](const StepCtx& ctx, std::vector<Successor>& out) {
        MachineConfig c = ctx.in;
        c.locals[ctx.pi][lv] = ctx.arg;
        c.pc[ctx.pi] = 2;
        out.push_back(succ(std::move(c)));
      },
      enq);

  m->add_line(2, LineKind::Intermediate,
              [X, li, capacity](const StepCtx& ctx,
                                std::vector<Successor>& out) {
                MachineConfig c = ctx.in;
                int64_t x = c.shared[X].as_int();
                if (x > capacity)
                  throw std::logic_error(
                      "queue backing array exhausted; raise max_total_ops");
                c.locals[ctx.pi][li] = Value::integer(x);
                c.shared[X] = Value::integer(x + 1);
                c.pc[ctx.pi] = 3;
                out.push_back(succ(std::move(c)));
              });

  m->add_line(3, LineKind::Intermediate,
              [Q, li, lv](const StepCtx& ctx, std::vector<Successor>& out) {
                MachineConfig c = ctx.in;
                int64_t i = c.locals[ctx.pi][li].as_int();
                c.shared[Q + i - 1] = c.locals[ctx.pi][lv];
                c.pc[ctx.pi] = 4;
                out.push_back(succ(std::move(c)));
              });

  m->add_line(4, LineKind::Return,
              [](const StepCtx& ctx, std::vector<Successor>& out) {
                out.push_back(succ(ctx.in, Value::ack()));
              });

  m->add_line(
      5, LineKind::Invocation,
      [](const StepCtx& ctx, std::vector<Successor>& out) {
        MachineConfig c = ctx.in;
        c.pc[ctx.pi] = 6;
        out.push_back(succ(std::move(c)));
      },
      deq);

  m->add_line(6, LineKind::Intermediate,
              [X, ll](const StepCtx& ctx, std::vector<Successor>& out) {
                MachineConfig c = ctx.in;
                c.locals[ctx.pi][ll] = c.shared[X];
                c.pc[ctx.pi] = 7;
                out.push_back(succ(std::move(c)));
              });

  bool backwards = variant == QueueVariant::DequeueScanBackwards;
  m->add_line(7, LineKind::Intermediate,
              [ll, lj, backwards](const StepCtx& ctx,
                                  std::vector<Successor>& out) {
                MachineConfig c = ctx.in;
                int64_t l = c.locals[ctx.pi][ll].as_int();
                if (l == 1) {
                  c.pc[ctx.pi] = 6;
                } else {
                  c.locals[ctx.pi][lj] = Value::integer(backwards ? l - 1 : 1);
                  c.pc[ctx.pi] = 8;
                }
                out.push_back(succ(std::move(c)));
              });

  bool noswap = variant == QueueVariant::DequeueNoSwap;
  m->add_line(8, LineKind::Intermediate,
              [Q, ll, lj, lx, backwards, noswap](const StepCtx& ctx,
                                                 std::vector<Successor>& out) {
                MachineConfig c = ctx.in;
                int64_t l = c.locals[ctx.pi][ll].as_int();
                int64_t j = c.locals[ctx.pi][lj].as_int();
                Value x = c.shared[Q + j - 1];
                if (!noswap) c.shared[Q + j - 1] = Value::bottom();
                c.locals[ctx.pi][lx] = x;
                if (!x.is_bottom()) {
                  c.pc[ctx.pi] = 9;
                } else if (backwards ? j == 1 : j == l - 1) {
                  c.pc[ctx.pi] = 6;
                } else {
                  c.locals[ctx.pi][lj] = Value::integer(backwards ? j - 1
                                                                  : j + 1);
                }
                out.push_back(succ(std::move(c)));
              });

  m->add_line(9, LineKind::Return,
              [lx](const StepCtx& ctx, std::vector<Successor>& out) {
                MachineConfig c = ctx.in;
                Value x = c.locals[ctx.pi][lx];
                c.locals[ctx.pi][lx] = Value::bottom();
                out.push_back(succ(std::move(c), std::move(x)));
              });

  return m;
}

}  // namespace

CaseStudy hw_queue(const CaseParams& params) {
  CaseStudy cs;
  cs.name = "hw-queue";
  cs.spec = queue_spec(params.values);
  cs.machine = queue_machine(params, QueueVariant::Standard);

  SequentialSpec spec = cs.spec;
  cs.partial_builder = [spec](const StepMachine& base) {
    TrackedMachine t(&base, spec);
    int enq = base.op_index("Enqueue");
    // a slot has been reserved and the enqueue may take effect: linearize any
    // subset of such still-pending enqueues, in any order
    t.set_rule(2, LinRule::subsets(
                      [enq](const RuleCtx& ctx, const AtomicConfiguration& c) {
                        std::vector<ProcessId> cand;
                        for (ProcessId p = 0; p < ctx.machine.num_processes();
                             ++p) {
                          if (ctx.post.cur_op[p] != enq) continue;
                          if (ctx.post.pc[p] != 3 && ctx.post.pc[p] != 4)
                            continue;
                          if (c.f[p].pending()) cand.push_back(p);
                        }
                        return cand;
                      }));
    // a nonempty slot was swapped out: this dequeue takes effect now
    t.set_rule(8, LinRule::self_if([](const RuleCtx& ctx) {
      return ctx.post.pc[ctx.pi] == 9;
    }));
    return t;
  };

  cs.mutants.push_back(
      Mutant{"dequeue-no-swap",
             "the dequeue scan reads slots without clearing them, so one "
             "element can be handed out twice",
             queue_machine(params, QueueVariant::DequeueNoSwap)});
  cs.mutants.push_back(
      Mutant{"dequeue-scan-backwards",
             "the dequeue scan walks the slots newest-first, returning the "
             "most recent element instead of the oldest",
             queue_machine(params, QueueVariant::DequeueScanBackwards)});
  return cs;
}

// -- splitting union-find -----------------------------------------------------

namespace {

enum class UfVariant { Standard, LinkLargerUnderSmaller, FindReturnsParent };

std::shared_ptr<StepMachine> union_find_machine(const CaseParams& params,
                                                UfVariant variant) {
  int n = params.uf_n;
  int max_tries = params.uf_max_tries;
  if (max_tries < 1)
    throw std::invalid_argument("union-find: max_tries must be >= 1");
  auto m = std::make_shared<StepMachine>(params.num_processes);
  // each element starts as its own parent, so the cells are added one by one
  int par = -1;
  for (int x = 1; x <= n; ++x) {
    int idx = m->add_shared("par" + std::to_string(x), Value::integer(x));
    if (x == 1) par = idx;
  }

  m->add_local("u", Value::bottom());
  m->add_local("v", Value::bottom());
  m->add_local("a", Value::bottom());
  m->add_local("b", Value::bottom());
  m->add_local("cc", Value::bottom());
  m->add_local("d", Value::bottom());
  m->add_local("t", Value::integer(0));
  int lu = m->local_index("u"), lv = m->local_index("v");
  int la = m->local_index("a"), lb = m->local_index("b");
  int lc = m->local_index("cc"), ld = m->local_index("d");
  int lt = m->local_index("t");

  int find_op = m->add_operation("Find", 1);
  int unite_op = m->add_operation("Unite", 6);

  auto rd = [par](const MachineConfig& c, int64_t x) {
    return c.shared[par + x - 1];
  };
  auto wr = [par](MachineConfig& c, int64_t x, Value val) {
    c.shared[par + x - 1] = std::move(val);
  };

  m->add_line(
      1, LineKind::Invocation,
      [lu, lt](const StepCtx& ctx, std::vector<Successor>& out) {
        MachineConfig c = ctx.in;
        c.locals[ctx.pi][lu] = ctx.arg;
        c.locals[ctx.pi][lt] = Value::integer(0);
        c.pc[ctx.pi] = 2;
        out.push_back(succ(std::move(c)));
      },
      find_op);

  bool ret_parent = variant == UfVariant::FindReturnsParent;
  m->add_line(2, LineKind::Intermediate,
              [rd, lu, la, ret_parent](const StepCtx& ctx,
                                       std::vector<Successor>& out) {
                MachineConfig c = ctx.in;
                Value a = rd(c, c.locals[ctx.pi][lu].as_int());
                c.locals[ctx.pi][la] = a;
                if (ret_parent || a == c.locals[ctx.pi][lu])
                  c.pc[ctx.pi] = 3;
                else
                  c.pc[ctx.pi] = 4;
                out.push_back(succ(std::move(c)));
              });

  m->add_line(3, LineKind::Return,
              [lu, la, ret_parent](const StepCtx& ctx,
                                   std::vector<Successor>& out) {
                const MachineConfig& c = ctx.in;
                Value res = ret_parent ? c.locals[ctx.pi][la]
                                       : c.locals[ctx.pi][lu];
                out.push_back(succ(c, std::move(res)));
              });

  m->add_line(4, LineKind::Intermediate,
              [rd, la, lb](const StepCtx& ctx, std::vector<Successor>& out) {
                MachineConfig c = ctx.in;
                c.locals[ctx.pi][lb] = rd(c, c.locals[ctx.pi][la].as_int());
                c.pc[ctx.pi] = 5;
                out.push_back(succ(std::move(c)));
              });

  // splitting step: CAS the node's parent to its grandparent, then either
  // retry the same node (while tries remain) or move to the old parent
  auto split_cas = [rd, wr, la, lb, lt, max_tries](
                       const StepCtx& ctx, std::vector<Successor>& out,
                       int lnode, int back_line) {
    MachineConfig base = ctx.in;
    int64_t node = base.locals[ctx.pi][lnode].as_int();
    if (rd(base, node) == base.locals[ctx.pi][la])
      wr(base, node, base.locals[ctx.pi][lb]);
    int64_t tries = base.locals[ctx.pi][lt].as_int();
    {
      MachineConfig adv = base;
      adv.locals[ctx.pi][lnode] = adv.locals[ctx.pi][la];
      adv.locals[ctx.pi][lt] = Value::integer(0);
      adv.pc[ctx.pi] = back_line;
      out.push_back(succ(std::move(adv)));
    }
    if (tries + 1 < max_tries) {
      MachineConfig retry = base;
      retry.locals[ctx.pi][lt] = Value::integer(tries + 1);
      retry.pc[ctx.pi] = back_line;
      out.push_back(succ(std::move(retry)));
    }
  };

  m->add_line(5, LineKind::Intermediate,
              [split_cas, lu](const StepCtx& ctx, std::vector<Successor>& out) {
                split_cas(ctx, out, lu, 2);
              });

  m->add_line(
      6, LineKind::Invocation,
      [lu, lv, lt](const StepCtx& ctx, std::vector<Successor>& out) {
        MachineConfig c = ctx.in;
        c.locals[ctx.pi][lu] = ctx.arg.at(0);
        c.locals[ctx.pi][lv] = ctx.arg.at(1);
        c.locals[ctx.pi][lt] = Value::integer(0);
        c.pc[ctx.pi] = 7;
        out.push_back(succ(std::move(c)));
      },
      unite_op);

  bool reversed = variant == UfVariant::LinkLargerUnderSmaller;
  m->add_line(7, LineKind::Intermediate,
              [rd, wr, lu, lv, reversed](const StepCtx& ctx,
                                         std::vector<Successor>& out) {
                MachineConfig c = ctx.in;
                int64_t u = c.locals[ctx.pi][lu].as_int();
                int64_t v = c.locals[ctx.pi][lv].as_int();
                if (u == v) {
                  c.pc[ctx.pi] = 14;
                } else {
                  bool link_u = reversed ? u > v : u < v;
                  int64_t child = link_u ? u : v;
                  int64_t parent = link_u ? v : u;
                  if (rd(c, child).as_int() == child) {
                    wr(c, child, Value::integer(parent));
                    c.pc[ctx.pi] = 14;
                  } else {
                    c.pc[ctx.pi] = 8;
                  }
                }
                out.push_back(succ(std::move(c)));
              });

  m->add_line(8, LineKind::Intermediate,
              [rd, lu, la, lt](const StepCtx& ctx,
                               std::vector<Successor>& out) {
                MachineConfig c = ctx.in;
                Value a = rd(c, c.locals[ctx.pi][lu].as_int());
                c.locals[ctx.pi][la] = a;
                if (a == c.locals[ctx.pi][lu]) {
                  c.locals[ctx.pi][lt] = Value::integer(0);
                  c.pc[ctx.pi] = 11;
                } else {
                  c.pc[ctx.pi] = 9;
                }
                out.push_back(succ(std::move(c)));
              });

  m->add_line(9, LineKind::Intermediate,
              [rd, la, lb](const StepCtx& ctx, std::vector<Successor>& out) {
                MachineConfig c = ctx.in;
                c.locals[ctx.pi][lb] = rd(c, c.locals[ctx.pi][la].as_int());
                c.pc[ctx.pi] = 10;
                out.push_back(succ(std::move(c)));
              });

  m->add_line(10, LineKind::Intermediate,
              [split_cas, lu](const StepCtx& ctx,
                              std::vector<Successor>& out) {
                split_cas(ctx, out, lu, 8);
              });

  m->add_line(11, LineKind::Intermediate,
              [rd, lv, la, lt](const StepCtx& ctx,
                               std::vector<Successor>& out) {
                MachineConfig c = ctx.in;
                Value cv = rd(c, c.locals[ctx.pi][lv].as_int());
                c.locals[ctx.pi][la] = cv;
                if (cv == c.locals[ctx.pi][lv]) {
                  c.locals[ctx.pi][lt] = Value::integer(0);
                  c.pc[ctx.pi] = 7;  // both ends look like roots: retry link
                } else {
                  c.pc[ctx.pi] = 12;
                }
                out.push_back(succ(std::move(c)));
              });

  m->add_line(12, LineKind::Intermediate,
              [rd, la, lb](const StepCtx& ctx, std::vector<Successor>& out) {
                MachineConfig c = ctx.in;
                c.locals[ctx.pi][lb] = rd(c, c.locals[ctx.pi][la].as_int());
                c.pc[ctx.pi] = 13;
                out.push_back(succ(std::move(c)));
              });

  m->add_line(13, LineKind::Intermediate,
              [split_cas, lv](const StepCtx& ctx,
                              std::vector<Successor>& out) {
                split_cas(ctx, out, lv, 11);
              });

  m->add_line(14, LineKind::Return,
              [](const StepCtx& ctx, std::vector<Successor>& out) {
                out.push_back(succ(ctx.in, Value::ack()));
              });

  return m;
}

}  // namespace

CaseStudy jt_union_find(const CaseParams& params) {
  CaseStudy cs;
  cs.name = "jt-union-find";
  cs.spec = union_find_spec(params.uf_n);
  cs.machine = union_find_machine(params, UfVariant::Standard);

  SequentialSpec spec = cs.spec;
  cs.partial_builder = [spec](const StepMachine& base) {
    TrackedMachine t(&base, spec);
    // a root observation: this Find takes effect at the moment it read a
    // self-parent
    t.set_rule(2, LinRule::self_if([](const RuleCtx& ctx) {
      return ctx.post.pc[ctx.pi] == 3;
    }));
    // the link try: this Unite takes effect when the two ends coincide or
    // the CAS installed the link
    t.set_rule(7, LinRule::self_if([](const RuleCtx& ctx) {
      return ctx.post.pc[ctx.pi] == 14;
    }));
    return t;
  };

  cs.mutants.push_back(
      Mutant{"link-larger-under-smaller",
             "the link try hangs the larger root under the smaller one, so "
             "Find reports the wrong representative",
             union_find_machine(params, UfVariant::LinkLargerUnderSmaller)});
  cs.mutants.push_back(
      Mutant{"find-returns-parent",
             "Find returns the first parent pointer it reads instead of "
             "walking to the root",
             union_find_machine(params, UfVariant::FindReturnsParent)});
  return cs;
}

// -- single-writer single-scanner snapshot ------------------------------------

namespace {

enum class SnapVariant { Standard, ScanSkipsOverwrite, WriteNeverForwards };

std::shared_ptr<StepMachine> snapshot_machine(const CaseParams& params,
                                              SnapVariant variant) {
  int mm = params.snapshot_m;
  auto m = std::make_shared<StepMachine>(params.num_processes);
  int X = m->add_shared("X", Value::integer(0));
  int A = m->add_shared_array("A", mm, Value::integer(0));
  int B = m->add_shared_array("B", mm, Value::bottom());
  m->add_local("i", Value::bottom());
  m->add_local("v", Value::bottom());
  m->add_local("j", Value::bottom());
  m->add_local("a",
               Value::tuple(std::vector<Value>(mm, Value::bottom())));
  int li = m->local_index("i"), lv = m->local_index("v");
  int lj = m->local_index("j"), la = m->local_index("a");

  int write_op = m->add_operation("Write", 1);
  int scan_op = m->add_operation("Scan", 6);

  m->add_line(
      1, LineKind::Invocation,
      [li, lv](const StepCtx& ctx, std::vector<Successor>& out) {
        MachineConfig c = ctx.in;
        c.locals[ctx.pi][li] = ctx.arg.at(0);
        c.locals[ctx.pi][lv] = ctx.arg.at(1);
        c.pc[ctx.pi] = 2;
        out.push_back(succ(std::move(c)));
      },
      write_op);

  m->add_line(2, LineKind::Intermediate,
              [A, li, lv](const StepCtx& ctx, std::vector<Successor>& out) {
                MachineConfig c = ctx.in;
                c.shared[A + c.locals[ctx.pi][li].as_int()] =
                    c.locals[ctx.pi][lv];
                c.pc[ctx.pi] = 3;
                out.push_back(succ(std::move(c)));
              });

  bool no_forward = variant == SnapVariant::WriteNeverForwards;
  m->add_line(3, LineKind::Intermediate,
              [X, no_forward](const StepCtx& ctx,
                              std::vector<Successor>& out) {
                MachineConfig c = ctx.in;
                bool scanning = c.shared[X].as_int() != 0;
                c.pc[ctx.pi] = (scanning && !no_forward) ? 4 : 5;
                out.push_back(succ(std::move(c)));
              });

  m->add_line(4, LineKind::Intermediate,
              [B, li, lv](const StepCtx& ctx, std::vector<Successor>& out) {
                MachineConfig c = ctx.in;
                c.shared[B + c.locals[ctx.pi][li].as_int()] =
                    c.locals[ctx.pi][lv];
                c.pc[ctx.pi] = 5;
                out.push_back(succ(std::move(c)));
              });

  m->add_line(5, LineKind::Return,
              [](const StepCtx& ctx, std::vector<Successor>& out) {
                out.push_back(succ(ctx.in, Value::ack()));
              });

  m->add_line(
      6, LineKind::Invocation,
      [](const StepCtx& ctx, std::vector<Successor>& out) {
        MachineConfig c = ctx.in;
        c.pc[ctx.pi] = 7;
        out.push_back(succ(std::move(c)));
      },
      scan_op);

  m->add_line(7, LineKind::Intermediate,
              [X, lj](const StepCtx& ctx, std::vector<Successor>& out) {
                MachineConfig c = ctx.in;
                c.shared[X] = Value::integer(1);
                c.locals[ctx.pi][lj] = Value::integer(0);
                c.pc[ctx.pi] = 8;
                out.push_back(succ(std::move(c)));
              });

  m->add_line(8, LineKind::Intermediate,
              [B, lj, mm](const StepCtx& ctx, std::vector<Successor>& out) {
                MachineConfig c = ctx.in;
                int64_t j = c.locals[ctx.pi][lj].as_int();
                c.shared[B + j] = Value::bottom();
                if (j + 1 == mm) {
                  c.locals[ctx.pi][lj] = Value::integer(0);
                  c.pc[ctx.pi] = 9;
                } else {
                  c.locals[ctx.pi][lj] = Value::integer(j + 1);
                }
                out.push_back(succ(std::move(c)));
              });

  bool skip_overwrite = variant == SnapVariant::ScanSkipsOverwrite;
  m->add_line(9, LineKind::Intermediate,
              [A, lj, la, mm](const StepCtx& ctx,
                              std::vector<Successor>& out) {
                MachineConfig c = ctx.in;
                int64_t j = c.locals[ctx.pi][lj].as_int();
                c.locals[ctx.pi][la].at(j) = c.shared[A + j];
                if (j + 1 == mm) {
                  c.locals[ctx.pi][lj] = Value::integer(0);
                  c.pc[ctx.pi] = 10;
                } else {
                  c.locals[ctx.pi][lj] = Value::integer(j + 1);
                }
                out.push_back(succ(std::move(c)));
              });

  m->add_line(10, LineKind::Intermediate,
              [X, skip_overwrite](const StepCtx& ctx,
                                  std::vector<Successor>& out) {
                MachineConfig c = ctx.in;
                c.shared[X] = Value::integer(0);
                c.pc[ctx.pi] = skip_overwrite ? 12 : 11;
                out.push_back(succ(std::move(c)));
              });

  m->add_line(11, LineKind::Intermediate,
              [B, lj, la, mm](const StepCtx& ctx,
                              std::vector<Successor>& out) {
                MachineConfig c = ctx.in;
                int64_t j = c.locals[ctx.pi][lj].as_int();
                const Value& fwd = c.shared[B + j];
                if (!fwd.is_bottom()) c.locals[ctx.pi][la].at(j) = fwd;
                if (j + 1 == mm) {
                  c.locals[ctx.pi][lj] = Value::integer(0);
                  c.pc[ctx.pi] = 12;
                } else {
                  c.locals[ctx.pi][lj] = Value::integer(j + 1);
                }
                out.push_back(succ(std::move(c)));
              });

  m->add_line(12, LineKind::Return,
              [la](const StepCtx& ctx, std::vector<Successor>& out) {
                out.push_back(succ(ctx.in, ctx.in.locals[ctx.pi][la]));
              });

  return m;
}

}  // namespace

CaseStudy jayanti_snapshot(const CaseParams& params) {
  CaseStudy cs;
  cs.name = "jayanti-snapshot";
  cs.spec = snapshot_spec(params.snapshot_m, params.values);
  cs.machine = snapshot_machine(params, SnapVariant::Standard);
  cs.swss = true;

  SequentialSpec spec = cs.spec;
  cs.partial_builder = [spec](const StepMachine& base) {
    TrackedMachine t(&base, spec);
    // the write takes effect at its main-array store; a concurrent pending
    // scan may take effect just before it (the scan can miss the value when
    // its collect has passed the component and the forwarding check loses
    // the race with the announcement coming down)
    t.set_rule(2, LinRule::with_sequences(
                      [](const RuleCtx& ctx, const AtomicConfiguration& c) {
                        std::vector<std::vector<ProcessId>> seqs{{ctx.pi}};
                        for (ProcessId p = 0; p < ctx.machine.num_processes();
                             ++p) {
                          if (p == ctx.pi) continue;
                          if (c.f[p].op == "Scan" && c.f[p].pending())
                            seqs.push_back({p, ctx.pi});
                        }
                        return seqs;
                      }));
    // the announcement comes down: a still-pending scan takes effect here
    t.set_rule(10, LinRule::self_if([](const RuleCtx&) { return true; }));
    // discard conjectured scan-first orders once the machine state rules the
    // recorded response out (e.g. a forward landed that the response misses)
    int scan_op = base.op_index("Scan");
    t.set_retain([scan_op](const StepMachine& m, const MachineConfig& post,
                           const AtomicConfiguration& c) {
      int scanners = 0;
      for (ProcessId p = 0; p < m.num_processes(); ++p)
        if (post.pc[p] != StepMachine::kIdle && post.cur_op[p] == scan_op)
          ++scanners;
      // outside the single-scanner workload constraint nothing is pruned
      if (scanners > 1) return true;
      for (ProcessId p = 0; p < m.num_processes(); ++p) {
        if (post.pc[p] == StepMachine::kIdle || post.cur_op[p] != scan_op)
          continue;
        if (!c.f[p].linearized()) continue;
        const Value& res = c.f[p].res;
        for (size_t k = 0; k < res.elems().size(); ++k) {
          auto allowed = snapshot_kth_return_set(m, post, static_cast<int>(k));
          if (std::find(allowed.begin(), allowed.end(), res.at(k)) ==
              allowed.end())
            return false;
        }
      }
      return true;
    });
    return t;
  };

  cs.mutants.push_back(
      Mutant{"scan-skips-overwrite",
             "the scan ignores the forwarding array, missing writes that "
             "landed after its collect began",
             snapshot_machine(params, SnapVariant::ScanSkipsOverwrite)});
  cs.mutants.push_back(
      Mutant{"write-never-forwards",
             "the write never posts to the forwarding array, so a concurrent "
             "scan can return a torn snapshot",
             snapshot_machine(params, SnapVariant::WriteNeverForwards)});
  return cs;
}

// -- registry -----------------------------------------------------------------

CaseStudy make_case_study(const std::string& name, const CaseParams& params) {
  if (name == "hw-queue") return hw_queue(params);
  if (name == "jt-union-find") return jt_union_find(params);
  if (name == "jayanti-snapshot") return jayanti_snapshot(params);
  if (name == "atomic-queue")
    return atomic_case(queue_spec(params.values), params.num_processes, name);
  if (name == "atomic-union-find")
    return atomic_case(union_find_spec(params.uf_n), params.num_processes,
                       name);
  if (name == "atomic-snapshot")
    return atomic_case(snapshot_spec(params.snapshot_m, params.values),
                       params.num_processes, name);
  throw std::invalid_argument("unknown case study: " + name);
}

std::vector<std::string> case_study_names() {
  return {"hw-queue",     "jt-union-find",    "jayanti-snapshot",
          "atomic-queue", "atomic-union-find", "atomic-snapshot"};
}

}  // namespace lintrack
