#include <doctest.h>

#include "lintrack/seq_types.hpp"

using namespace lintrack;

TEST_CASE("queue spec is FIFO") {
  SequentialSpec q = queue_spec({1, 2});
  Value s = q.initial_state;
  auto t1 = q.delta(s, 0, "Enqueue", Value::integer(1));
  REQUIRE(t1);
  CHECK(t1->response == Value::ack());
  auto t2 = q.delta(t1->state, 1, "Enqueue", Value::integer(2));
  REQUIRE(t2);
  auto d1 = q.delta(t2->state, 0, "Dequeue", Value::bottom());
  REQUIRE(d1);
  CHECK(d1->response == Value::integer(1));
  auto d2 = q.delta(d1->state, 0, "Dequeue", Value::bottom());
  REQUIRE(d2);
  CHECK(d2->response == Value::integer(2));
  CHECK(d2->state == q.initial_state);
}

TEST_CASE("dequeue on an empty queue is not enabled") {
  SequentialSpec q = queue_spec({1});
  CHECK_FALSE(q.delta(q.initial_state, 0, "Dequeue", Value::bottom()));
}

TEST_CASE("queue operation argument domains") {
  SequentialSpec q = queue_spec({1, 2});
  const OpSpec& enq = *q.find_op("Enqueue");
  CHECK(enq.args == std::vector<Value>{Value::integer(1), Value::integer(2)});
  const OpSpec& deq = *q.find_op("Dequeue");
  CHECK(deq.args == std::vector<Value>{Value::bottom()});
}

TEST_CASE("union-find canonizes to the maximum element") {
  SequentialSpec uf = union_find_spec(3);
  Value s = uf.initial_state;
  for (int64_t x = 1; x <= 3; ++x) {
    auto f = uf.delta(s, 0, "Find", Value::integer(x));
    REQUIRE(f);
    CHECK(f->response == Value::integer(x));
    CHECK(f->state == s);
  }
  auto u = uf.delta(s, 0, "Unite",
                    Value::pair(Value::integer(1), Value::integer(2)));
  REQUIRE(u);
  CHECK(u->response == Value::ack());
  auto f1 = uf.delta(u->state, 0, "Find", Value::integer(1));
  REQUIRE(f1);
  CHECK(f1->response == Value::integer(2));
  auto u2 = uf.delta(u->state, 0, "Unite",
                     Value::pair(Value::integer(1), Value::integer(3)));
  REQUIRE(u2);
  auto f2 = uf.delta(u2->state, 0, "Find", Value::integer(2));
  REQUIRE(f2);
  CHECK(f2->response == Value::integer(3));
}

TEST_CASE("union-find rejects out-of-range elements") {
  SequentialSpec uf = union_find_spec(2);
  CHECK_THROWS(uf.delta(uf.initial_state, 0, "Find", Value::integer(5)));
}

TEST_CASE("union-find unite argument domain is ordered pairs") {
  SequentialSpec uf = union_find_spec(3);
  const OpSpec& u = *uf.find_op("Unite");
  CHECK(u.args.size() == 3);  // (1,2) (1,3) (2,3)
  for (const Value& a : u.args) CHECK(a.at(0).as_int() < a.at(1).as_int());
}

TEST_CASE("snapshot writes land and scans are pure reads") {
  SequentialSpec sn = snapshot_spec(2, {1, 2});
  Value s = sn.initial_state;
  CHECK(s == Value::int_tuple({0, 0}));
  auto w = sn.delta(s, 0, "Write",
                    Value::pair(Value::integer(1), Value::integer(2)));
  REQUIRE(w);
  CHECK(w->response == Value::ack());
  CHECK(w->state == Value::int_tuple({0, 2}));
  auto r = sn.delta(w->state, 1, "Scan", Value::bottom());
  REQUIRE(r);
  CHECK(r->response == Value::int_tuple({0, 2}));
  CHECK(r->state == w->state);
}
