#include <doctest.h>

#include <stdexcept>

#include "lintrack/case_studies.hpp"
#include "lintrack/seq_types.hpp"
#include "lintrack/tracker.hpp"

using namespace lintrack;

TEST_CASE("subset-permutation enumeration") {
  auto seqs = all_sequences({0, 1});
  CHECK(seqs.size() == 5);  // (), (0), (1), (0 1), (1 0)
  CHECK(all_sequences({}).size() == 1);
  CHECK(all_sequences({0, 1, 2}).size() == 16);  // sum over k of 3!/k!
}

TEST_CASE("invocation evolution tracks both serialization orders") {
  SequentialSpec q = queue_spec({1, 2});
  Meta m0{{AtomicConfiguration::initial(q.initial_state, 2)}};
  Meta m1 = evolve_inv(q, m0, 0, "Enqueue", Value::integer(1));
  // the enqueue is pending in one configuration and already linearized in
  // the other
  REQUIRE(m1.size() == 2);
  int pending_cnt = 0, linearized_cnt = 0;
  for (const AtomicConfiguration& c : m1) {
    if (c.f[0].pending()) {
      ++pending_cnt;
      CHECK(c.sigma == q.initial_state);
    }
    if (c.f[0].linearized()) {
      ++linearized_cnt;
      CHECK(c.f[0].res == Value::ack());
      CHECK(c.sigma == Value::int_tuple({1}));
    }
  }
  CHECK(pending_cnt == 1);
  CHECK(linearized_cnt == 1);

  // closure is idempotent here: nothing new can linearize
  CHECK(evolve(q, m1) == m1);
}

TEST_CASE("return evolution filters on the response") {
  SequentialSpec q = queue_spec({1});
  Meta m0{{AtomicConfiguration::initial(q.initial_state, 1)}};
  Meta m1 = evolve_inv(q, m0, 0, "Enqueue", Value::integer(1));
  Meta ret = evolve_ret(q, m1, 0, Value::ack());
  REQUIRE(ret.size() == 1);
  CHECK(ret.configs()[0].sigma == Value::int_tuple({1}));
  CHECK(ret.configs()[0].f[0].idle());

  // a response the object cannot have produced empties the meta: the
  // linearizability-violation signal
  CHECK(evolve_ret(q, m1, 0, Value::integer(9)).empty());
}

TEST_CASE("delta_star folds linearizations in order") {
  SequentialSpec q = queue_spec({1, 2});
  AtomicConfiguration c = AtomicConfiguration::initial(q.initial_state, 2);
  c = invoke_cfg(c, 0, "Enqueue", Value::integer(1));
  c = invoke_cfg(c, 1, "Enqueue", Value::integer(2));
  CHECK(pending(c) == std::vector<ProcessId>{0, 1});
  auto lin = delta_star(q, c, {1, 0});
  REQUIRE(lin);
  CHECK(lin->sigma == Value::int_tuple({2, 1}));
  // a disabled transition makes the whole sequence infeasible
  AtomicConfiguration d = AtomicConfiguration::initial(q.initial_state, 1);
  d = invoke_cfg(d, 0, "Dequeue", Value::bottom());
  CHECK_FALSE(delta_star(q, d, {0}));
}

TEST_CASE("full tracker meta after a short run matches hand computation") {
  CaseParams p;
  CaseStudy cs = hw_queue(p);
  TrackedMachine full = cs.full();
  TrackedState s = full.initial_state();
  REQUIRE(s.meta.size() == 1);

  s = full.invoke(s, 0, "Enqueue", Value::integer(1))[0].second;
  CHECK(s.meta.size() == 2);  // pending or linearized
  s = full.step(s, 0)[0].second;  // reserve the slot
  CHECK(s.meta.size() == 2);
  s = full.step(s, 0)[0].second;  // store the element
  CHECK(s.meta.size() == 2);
  s = full.step(s, 0)[0].second;  // return ack: only the linearized half
  CHECK(s.meta.size() == 1);
  CHECK(s.meta.configs()[0].sigma == Value::int_tuple({1}));
}

TEST_CASE("partial tracker rule sites") {
  CaseParams p;
  CHECK(hw_queue(p).partial().rule_sites() == std::vector<int>{2, 8});
  CHECK(jt_union_find(p).partial().rule_sites() == std::vector<int>{2, 7});
  CHECK(jayanti_snapshot(p).partial().rule_sites() == std::vector<int>{2, 10});
}

TEST_CASE("partial tracker stays inside the full tracker on a coupled run") {
  CaseParams p;
  CaseStudy cs = hw_queue(p);
  TrackedMachine partial = cs.partial();
  TrackedMachine full = cs.full();

  MachineConfig c = cs.machine->initial_config();
  std::vector<Event> events;
  auto take = [&](std::vector<std::pair<Event, MachineConfig>> succs) {
    events.push_back(succs[0].first);
    c = succs[0].second;
  };
  take(cs.machine->invoke(c, 0, "Enqueue", Value::integer(1)));
  take(cs.machine->invoke(c, 1, "Dequeue", Value::bottom()));
  take(cs.machine->step(c, 0));
  take(cs.machine->step(c, 1));
  take(cs.machine->step(c, 0));
  take(cs.machine->step(c, 1));
  CHECK_FALSE(coupled_domination_violation(partial, full, events));
}

TEST_CASE("validate_partial covers every enabled step of the samples") {
  CaseParams p;
  CaseStudy cs = hw_queue(p);
  TrackedMachine good = cs.partial();
  TrackedState s = good.initial_state();
  s = good.invoke(s, 0, "Dequeue", Value::bottom())[0].second;

  ValidationReport r = validate_partial(good, {good.initial_state(), s});
  CHECK(r.ok());
  CHECK(r.checks > 0);

  // the rule vocabulary only linearizes pending operations, so even an
  // over-eager annotation stays inside the full closure
  TrackedMachine eager(cs.machine.get(), cs.spec);
  for (const auto& [line, def] : cs.machine->lines())
    eager.set_rule(line, LinRule::self_if([](const RuleCtx&) { return true; }));
  CHECK(validate_partial(eager, {good.initial_state(), s}).ok());

  // linearizing a non-pending operation is a contract violation, not a
  // silently wrong meta
  CHECK_THROWS_AS(
      delta_star(cs.spec, AtomicConfiguration::initial(cs.spec.initial_state, 1),
                 {0}),
      std::logic_error);
}
