#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "duplex/persistent.hpp"
#include "duplex/value.hpp"

namespace duplex {

// Builds a value once `arity` components have been delivered. This is the
// first-order form of a parse-side lead-out: instead of wrapping the
// accumulator continuation, the lead leaves a frame on the stack that the
// next deliveries fill in.
struct Reducer {
  std::string tag;
  std::size_t arity = 0;
  std::function<Value(std::vector<Value>)> build;
};

struct Pending {
  std::shared_ptr<const Reducer> reducer;
  std::vector<Value> collected;
};

struct StackEntry {
  std::variant<Value, Pending> item;
  // Index of the caller-supplied argument this value derives from, or -1.
  // Only used to name the offending argument in diagnostics.
  int origin = -1;

  bool is_value() const noexcept { return item.index() == 0; }
  const Value& value() const { return std::get<Value>(item); }
  const Pending& pending() const { return std::get<Pending>(item); }
};

// Top-first sequence of entries. Persistent: every operation returns a new
// stack and copies are O(1) snapshots.
class Stack {
 public:
  Stack() = default;

  // Builds a stack whose top is items.front().
  static Stack of(std::span<const Value> top_first);
  static Stack of(std::initializer_list<Value> top_first);

  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }

  // Plain push, no reduction.
  Stack push(Value v, int origin = -1) const;

  // Parse-side push: fills the innermost Pending frame and reduces every frame
  // that becomes complete, innermost first.
  Stack deliver(Value v) const;

  // Opens a Pending frame. Arity-0 reducers reduce immediately.
  Stack open(std::shared_ptr<const Reducer> reducer) const;

  // Throws ContractViolation on underflow or when the top is a Pending frame.
  std::pair<Value, Stack> pop(const char* who = "pop") const;
  std::pair<StackEntry, Stack> pop_entry(const char* who = "pop") const;

  const StackEntry& top() const;  // throws on underflow

  bool operator==(const Stack& other) const;
  std::string debug() const;

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

 private:
  explicit Stack(detail::Chain<StackEntry> e) : entries_(std::move(e)) {}

  detail::Chain<StackEntry> entries_;
};

}  // namespace duplex
