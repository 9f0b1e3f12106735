#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "duplex/stack.hpp"
#include "duplex/value.hpp"

namespace duplex {

// A pair of mutually inverse maps. `to` runs on the printing side (outer value
// to inner representation), `from` on the parsing side.
struct Iso {
  std::string name;
  std::function<Value(const Value&)> to;
  std::function<Value(const Value&)> from;
};

Iso identity_iso();

// Text <-> List of Char.
Iso text_chars_iso();

// Int in 0..9 <-> its digit Char. Out-of-domain values are contract violations.
Iso digit_iso();

// Int <-> List of Char holding its decimal rendering (a leading '-' for
// negatives). Parsing back reads like `read`: leading zeros are accepted, and
// an empty or out-of-range literal is a contract violation.
Iso decimal_iso();

// Pair(a, b) <-> List[a, b]; the value-level witness of (un)currying.
Iso pair_iso();
std::array<Value, 2> pair_split(const Value& p);
Value pair_join(Value a, Value b);

// Focus on one constructor of a sum type, with `arity` components.
// Reviewing always succeeds on well-typed components; previewing may fail.
class Prism {
 public:
  using PreviewFn = std::function<std::optional<std::vector<Value>>(const Value&)>;
  using ReviewFn = std::function<Value(std::vector<Value>)>;

  Prism(std::string tag, std::size_t arity, PreviewFn preview, ReviewFn review);

  const std::string& tag() const noexcept { return reducer_->tag; }
  std::size_t arity() const noexcept { return reducer_->arity; }

  std::optional<std::vector<Value>> preview(const Value& v) const { return preview_(v); }

  // Throws ContractViolation when components.size() != arity().
  Value review(std::vector<Value> components) const;

  // The parse-side lead-out as a stack frame builder.
  const std::shared_ptr<const Reducer>& reducer() const noexcept { return reducer_; }

 private:
  PreviewFn preview_;
  std::shared_ptr<const Reducer> reducer_;
};

// review builds Adt(tag, args); preview matches Adt(tag, args) with
// args.size() == arity.
Prism adt_prism(std::string tag, std::size_t arity);

// Nonempty List <-> (head, tail).
Prism cons_prism();
// Empty List <-> no components.
Prism nil_prism();

// Matches exactly `v`, focusing on Unit. This is the shape of the prisms for
// nullary constructors such as True and False.
Prism constant_prism(std::string tag, Value v);

}  // namespace duplex
