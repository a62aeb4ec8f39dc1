#include "lintrack/value.hpp"

#include <sstream>
#include <stdexcept>

namespace lintrack {

int64_t Value::as_int() const {
  if (kind_ != Kind::Int) throw std::logic_error("Value: not an Int");
  return int_;
}

const std::vector<Value>& Value::elems() const {
  if (kind_ != Kind::Tuple) throw std::logic_error("Value: not a Tuple");
  return elems_;
}

std::vector<Value>& Value::elems() {
  if (kind_ != Kind::Tuple) throw std::logic_error("Value: not a Tuple");
  return elems_;
}

const Value& Value::at(size_t i) const {
  const auto& e = elems();
  if (i >= e.size()) throw std::out_of_range("Value: tuple index");
  return e[i];
}

Value& Value::at(size_t i) {
  auto& e = elems();
  if (i >= e.size()) throw std::out_of_range("Value: tuple index");
  return e[i];
}

bool Value::operator==(const Value& o) const {
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case Kind::Bottom:
    case Kind::Ack:
      return true;
    case Kind::Int:
      return int_ == o.int_;
    case Kind::Tuple:
      return elems_ == o.elems_;
  }
  return false;
}

int Value::compare(const Value& o) const {
  if (kind_ != o.kind_) return kind_ < o.kind_ ? -1 : 1;
  switch (kind_) {
    case Kind::Bottom:
    case Kind::Ack:
      return 0;
    case Kind::Int:
      return int_ < o.int_ ? -1 : (int_ > o.int_ ? 1 : 0);
    case Kind::Tuple: {
      size_t n = std::min(elems_.size(), o.elems_.size());
      for (size_t i = 0; i < n; ++i) {
        int c = elems_[i].compare(o.elems_[i]);
        if (c != 0) return c;
      }
      if (elems_.size() != o.elems_.size())
        return elems_.size() < o.elems_.size() ? -1 : 1;
      return 0;
    }
  }
  return 0;
}

size_t Value::hash() const {
  size_t h = static_cast<size_t>(kind_) * 0x9e3779b97f4a7c15ULL;
  switch (kind_) {
    case Kind::Bottom:
    case Kind::Ack:
      return h;
    case Kind::Int:
      return hash_combine(h, std::hash<int64_t>{}(int_));
    case Kind::Tuple:
      for (const Value& e : elems_) h = hash_combine(h, e.hash());
      return h;
  }
  return h;
}

std::string Value::str() const {
  switch (kind_) {
    case Kind::Bottom:
      return "_";
    case Kind::Ack:
      return "ack";
    case Kind::Int:
      return std::to_string(int_);
    case Kind::Tuple: {
      std::ostringstream out;
      out << "(";
      for (size_t i = 0; i < elems_.size(); ++i) {
        if (i) out << ",";
        out << elems_[i].str();
      }
      out << ")";
      return out.str();
    }
  }
  return "?";
}

}  // namespace lintrack
