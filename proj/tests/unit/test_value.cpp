#include <doctest.h>

#include "lintrack/value.hpp"

using namespace lintrack;

TEST_CASE("value kinds and equality") {
  CHECK(Value::bottom().is_bottom());
  CHECK(Value::ack().is_ack());
  CHECK(Value::integer(3).is_int());
  CHECK(Value::integer(3).as_int() == 3);
  CHECK(Value::bottom() == Value());
  CHECK(Value::integer(1) != Value::integer(2));
  CHECK(Value::ack() != Value::bottom());
  CHECK(Value::pair(Value::integer(1), Value::integer(2)) ==
        Value::int_tuple({1, 2}));
}

TEST_CASE("value ordering is total across kinds") {
  std::vector<Value> vals = {Value::bottom(), Value::ack(), Value::integer(-1),
                             Value::integer(5), Value::int_tuple({}),
                             Value::int_tuple({1}), Value::int_tuple({1, 2})};
  for (size_t i = 0; i < vals.size(); ++i)
    for (size_t j = 0; j < vals.size(); ++j) {
      int c = vals[i].compare(vals[j]);
      CHECK(c == -vals[j].compare(vals[i]));
      CHECK((c == 0) == (vals[i] == vals[j]));
    }
}

TEST_CASE("tuple accessors") {
  Value t = Value::int_tuple({7, 8, 9});
  CHECK(t.size() == 3);
  CHECK(t.at(1) == Value::integer(8));
  t.at(1) = Value::integer(0);
  CHECK(t == Value::int_tuple({7, 0, 9}));
  CHECK_THROWS(Value::integer(1).elems());
  CHECK_THROWS(Value::ack().as_int());
}

TEST_CASE("hashing distinguishes common values") {
  CHECK(Value::integer(1).hash() != Value::integer(2).hash());
  CHECK(Value::bottom().hash() != Value::ack().hash());
  CHECK(Value::int_tuple({1, 2}).hash() != Value::int_tuple({2, 1}).hash());
  CHECK(Value::int_tuple({1, 2}).hash() == Value::int_tuple({1, 2}).hash());
}

TEST_CASE("string rendering") {
  CHECK(Value::bottom().str() == "_");
  CHECK(Value::integer(42).str() == "42");
  CHECK(Value::int_tuple({1, 2}).str() == "(1,2)");
}
