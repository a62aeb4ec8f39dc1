#ifndef LINTRACK_VALUE_HPP
#define LINTRACK_VALUE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace lintrack {

/// A small structurally-hashable value domain shared by sequential states,
/// operation arguments, responses, and machine registers.
///
/// Kinds: Bottom (the distinguished undefined value), Ack, Int, and Tuple
/// (used for pair arguments, array states, and sequence states).
class Value {
 public:
  enum class Kind : uint8_t { Bottom, Ack, Int, Tuple };

  Value() : kind_(Kind::Bottom), int_(0) {}

  static Value bottom() { return Value(); }
  static Value ack() {
    Value v;
    v.kind_ = Kind::Ack;
    return v;
  }
  static Value integer(int64_t i) {
    Value v;
    v.kind_ = Kind::Int;
    v.int_ = i;
    return v;
  }
  static Value tuple(std::vector<Value> elems) {
    Value v;
    v.kind_ = Kind::Tuple;
    v.elems_ = std::move(elems);
    return v;
  }
  static Value pair(Value a, Value b) {
    return tuple({std::move(a), std::move(b)});
  }
  static Value int_tuple(const std::vector<int64_t>& ints) {
    std::vector<Value> elems;
    elems.reserve(ints.size());
    for (int64_t i : ints) elems.push_back(integer(i));
    return tuple(std::move(elems));
  }

  Kind kind() const { return kind_; }
  bool is_bottom() const { return kind_ == Kind::Bottom; }
  bool is_ack() const { return kind_ == Kind::Ack; }
  bool is_int() const { return kind_ == Kind::Int; }
  bool is_tuple() const { return kind_ == Kind::Tuple; }

  int64_t as_int() const;
  const std::vector<Value>& elems() const;
  std::vector<Value>& elems();
  size_t size() const { return elems().size(); }
  const Value& at(size_t i) const;
  Value& at(size_t i);

  bool operator==(const Value& o) const;
  bool operator!=(const Value& o) const { return !(*this == o); }
  bool operator<(const Value& o) const { return compare(o) < 0; }
  int compare(const Value& o) const;

  size_t hash() const;
  std::string str() const;

 private:
  Kind kind_;
  int64_t int_;
  std::vector<Value> elems_;
};

inline size_t hash_combine(size_t seed, size_t h) {
  return seed ^ (h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace lintrack

template <>
struct std::hash<lintrack::Value> {
  size_t operator()(const lintrack::Value& v) const { return v.hash(); }
};

#endif
