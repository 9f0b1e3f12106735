#include "duplex/stack.hpp"

#include "duplex/error.hpp"

namespace duplex {

Stack Stack::of(std::span<const Value> top_first) {
  detail::Chain<StackEntry> c;
  for (auto it = top_first.rbegin(); it != top_first.rend(); ++it) c = c.push(StackEntry{*it});
  return Stack(std::move(c));
}

Stack Stack::of(std::initializer_list<Value> top_first) {
  return of(std::span<const Value>(top_first.begin(), top_first.size()));
}

Stack Stack::push(Value v, int origin) const { return Stack(entries_.push(StackEntry{std::move(v), origin})); }

Stack Stack::deliver(Value v) const {
  auto rest = entries_;
  while (!rest.empty() && !rest.top().is_value()) {
    Pending frame = rest.top().pending();
    rest = rest.pop();
    frame.collected.push_back(std::move(v));
    if (frame.collected.size() < frame.reducer->arity) {
      return Stack(rest.push(StackEntry{std::move(frame)}));
    }
    v = frame.reducer->build(std::move(frame.collected));
  }
  return Stack(rest.push(StackEntry{std::move(v)}));
}

Stack Stack::open(std::shared_ptr<const Reducer> reducer) const {
  if (reducer->arity == 0) return deliver(reducer->build({}));
  return Stack(entries_.push(StackEntry{Pending{std::move(reducer), {}}}));
}

std::pair<StackEntry, Stack> Stack::pop_entry(const char* who) const {
  if (entries_.empty()) throw ContractViolation(std::string(who) + ": stack underflow");
  const auto& e = entries_.top();
  if (!e.is_value()) {
    throw ContractViolation(std::string(who) + ": found pending " + e.pending().reducer->tag +
                            " frame where a value was expected");
  }
  return {e, Stack(entries_.pop())};
}

std::pair<Value, Stack> Stack::pop(const char* who) const {
  auto [e, rest] = pop_entry(who);
  return {std::get<Value>(std::move(e.item)), std::move(rest)};
}

const StackEntry& Stack::top() const {
  if (entries_.empty()) throw ContractViolation("top: stack underflow");
  return entries_.top();
}

bool Stack::operator==(const Stack& other) const {
  if (size() != other.size()) return false;
  auto j = other.entries_.begin();
  for (auto i = entries_.begin(); i != entries_.end(); ++i, ++j) {
    if (i == j) return true;
    if (i->is_value() != j->is_value()) return false;
    if (i->is_value()) {
      if (!(i->value() == j->value())) return false;
    } else {
      const auto& a = i->pending();
      const auto& b = j->pending();
      if (a.reducer->tag != b.reducer->tag || a.reducer->arity != b.reducer->arity || a.collected != b.collected) {
        return false;
      }
    }
  }
  return true;
}

std::string Stack::debug() const {
  std::string out = "[";
  bool first = true;
  for (const auto& e : entries_) {
    if (!first) out += ", ";
    first = false;
    if (e.is_value()) {
      out += e.value().debug();
    } else {
      const auto& p = e.pending();
      out += "<" + p.reducer->tag + " " + std::to_string(p.collected.size()) + "/" +
             std::to_string(p.reducer->arity) + ">";
    }
  }
  return out + "]";
}

}  // namespace duplex
