#include <benchmark/benchmark.h>

#include "lintrack/explorer.hpp"
#include "lintrack/oracle.hpp"
#include "lintrack/seq_types.hpp"
#include "lintrack/tracker.hpp"

using namespace lintrack;

namespace {

Scenario scenario(const std::string& cs, const std::string& tracker, int ops) {
  Scenario s;
  s.case_study = cs;
  s.tracker = tracker;
  s.num_processes = 2;
  s.max_ops_per_process = ops;
  s.values = {1, 2};
  s.max_events = 100;
  return s;
}

void bm_evolve_closure(benchmark::State& state) {
  SequentialSpec q = queue_spec({1, 2, 3});
  Meta m{{AtomicConfiguration::initial(q.initial_state, 3)}};
  m = evolve_inv(q, m, 0, "Enqueue", Value::integer(1));
  m = evolve_inv(q, m, 1, "Enqueue", Value::integer(2));
  m = evolve_inv(q, m, 2, "Dequeue", Value::bottom());
  for (auto _ : state) benchmark::DoNotOptimize(evolve(q, m));
}
BENCHMARK(bm_evolve_closure);

void bm_explore(benchmark::State& state, const std::string& cs,
                const std::string& tracker) {
  Scenario s = scenario(cs, tracker, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    ExplorationReport r = explore(s, Property::MetaNonempty);
    benchmark::DoNotOptimize(r.states_visited);
    state.counters["states"] = static_cast<double>(r.states_visited);
  }
}
BENCHMARK_CAPTURE(bm_explore, hw_queue_full, "hw-queue", "full")
    ->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_explore, hw_queue_partial, "hw-queue", "partial")
    ->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_explore, snapshot_partial, "jayanti-snapshot", "partial")
    ->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void bm_check_strong_uf(benchmark::State& state) {
  Scenario s = scenario("jt-union-find", "partial",
                        static_cast<int>(state.range(0)));
  for (auto _ : state) {
    ExplorationReport r = check_strong(s);
    benchmark::DoNotOptimize(r.states_visited);
  }
}
BENCHMARK(bm_check_strong_uf)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void bm_oracle(benchmark::State& state) {
  SequentialSpec q = queue_spec({1, 2});
  Behavior b;
  auto inv = [&](ProcessId p, const std::string& op, Value arg) {
    Event e;
    e.process = p;
    e.kind = Event::Kind::Invocation;
    e.op = op;
    e.arg = std::move(arg);
    b.push_back(e);
  };
  auto res = [&](ProcessId p, Value r) {
    Event e;
    e.process = p;
    e.kind = Event::Kind::Response;
    e.res = std::move(r);
    b.push_back(e);
  };
  inv(0, "Enqueue", Value::integer(1));
  inv(1, "Dequeue", Value::bottom());
  res(0, Value::ack());
  inv(0, "Enqueue", Value::integer(2));
  res(1, Value::integer(1));
  inv(1, "Dequeue", Value::bottom());
  for (auto _ : state)
    benchmark::DoNotOptimize(linearizations(q, b, 2).linearizations.size());
}
BENCHMARK(bm_oracle);

}  // namespace

BENCHMARK_MAIN();
