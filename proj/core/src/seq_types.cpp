#include "lintrack/seq_types.hpp"

#include <stdexcept>

namespace lintrack {

SequentialSpec queue_spec(const std::vector<int64_t>& values) {
  SequentialSpec spec;
  spec.name = "queue";
  spec.initial_state = Value::tuple({});

  OpSpec enq{"Enqueue", {}};
  for (int64_t v : values) enq.args.push_back(Value::integer(v));
  OpSpec deq{"Dequeue", {Value::bottom()}};
  spec.operations = {enq, deq};

  spec.delta = [](const Value& state, ProcessId, const std::string& op,
                  const Value& arg) -> std::optional<Transition> {
    if (op == "Enqueue") {
      std::vector<Value> items = state.elems();
      items.push_back(arg);
      return Transition{Value::tuple(std::move(items)), Value::ack()};
    }
    if (op == "Dequeue") {
      if (state.elems().empty()) return std::nullopt;  // not enabled
      Value head = state.at(0);
      std::vector<Value> items(state.elems().begin() + 1,
                               state.elems().end());
      return Transition{Value::tuple(std::move(items)), head};
    }
    throw std::invalid_argument("queue_spec: unknown operation " + op);
  };
  return spec;
}

SequentialSpec union_find_spec(int n) {
  if (n < 1) throw std::invalid_argument("union_find_spec: n must be >= 1");
  SequentialSpec spec;
  spec.name = "union-find";
  {
    std::vector<int64_t> canon(n);
    for (int i = 0; i < n; ++i) canon[i] = i + 1;
    spec.initial_state = Value::int_tuple(canon);
  }

  OpSpec find{"Find", {}};
  for (int x = 1; x <= n; ++x) find.args.push_back(Value::integer(x));
  OpSpec unite{"Unite", {}};
  for (int x = 1; x <= n; ++x)
    for (int y = x + 1; y <= n; ++y)
      unite.args.push_back(Value::pair(Value::integer(x), Value::integer(y)));
  spec.operations = {find, unite};

  auto check_elem = [n](int64_t x) {
    if (x < 1 || x > n)
      throw std::invalid_argument("union_find_spec: element out of range");
  };

  spec.delta = [n, check_elem](const Value& state, ProcessId,
                               const std::string& op,
                               const Value& arg) -> std::optional<Transition> {
    if (op == "Find") {
      int64_t x = arg.as_int();
      check_elem(x);
      return Transition{state, state.at(x - 1)};
    }
    if (op == "Unite") {
      int64_t x = arg.at(0).as_int();
      int64_t y = arg.at(1).as_int();
      check_elem(x);
      check_elem(y);
      Value a = state.at(x - 1);
      Value b = state.at(y - 1);
      if (a == b) return Transition{state, Value::ack()};
      Value top = a < b ? b : a;
      std::vector<Value> canon = state.elems();
      for (int i = 0; i < n; ++i)
        if (canon[i] == a || canon[i] == b) canon[i] = top;
      return Transition{Value::tuple(std::move(canon)), Value::ack()};
    }
    throw std::invalid_argument("union_find_spec: unknown operation " + op);
  };
  return spec;
}

SequentialSpec snapshot_spec(int m, const std::vector<int64_t>& values) {
  if (m < 1) throw std::invalid_argument("snapshot_spec: m must be >= 1");
  SequentialSpec spec;
  spec.name = "snapshot";
  spec.initial_state = Value::int_tuple(std::vector<int64_t>(m, 0));

  OpSpec write{"Write", {}};
  for (int i = 0; i < m; ++i)
    for (int64_t v : values)
      write.args.push_back(Value::pair(Value::integer(i), Value::integer(v)));
  OpSpec scan{"Scan", {Value::bottom()}};
  spec.operations = {write, scan};

  spec.delta = [m](const Value& state, ProcessId, const std::string& op,
                   const Value& arg) -> std::optional<Transition> {
    if (op == "Write") {
      int64_t i = arg.at(0).as_int();
      if (i < 0 || i >= m)
        throw std::invalid_argument("snapshot_spec: index out of range");
      std::vector<Value> comps = state.elems();
      comps[i] = arg.at(1);
      return Transition{Value::tuple(std::move(comps)), Value::ack()};
    }
    if (op == "Scan") return Transition{state, state};
    throw std::invalid_argument("snapshot_spec: unknown operation " + op);
  };
  return spec;
}

}  // namespace lintrack
