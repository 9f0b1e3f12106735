#pragma once

// Tier 2: cassettes with failure and choice.
//
// Descriptors form a category under `compose` (identity as unit) and a monoid
// under `choice` (`fail` as unit). Leads lift prisms: on the print track a
// lead-in previews the value on top of the stack and replaces it with its
// components, failing on a mismatch; on the parse track a lead-out opens a
// frame that reviews the next `arity` delivered values and never fails.
//
// A descriptor is an immutable graph of nodes. The engine runs it in either
// direction as an explicit machine: a persistent list of pending nodes plays
// the success continuation and a stack of choice points plays the failure
// continuation. Each choice point records the input offset (or output length)
// and the persistent value stack, so resuming an alternative restores exactly
// the state in which the choice was entered. Backtracking is unrestricted:
// a failure anywhere downstream of a choice resumes its next alternative.
//
// Recursive descriptors are built with `fix` or `defer`. Recursion must be
// guarded by a consuming descriptor; left recursion does not terminate.

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <variant>

#include "duplex/optics.hpp"
#include "duplex/stack.hpp"
#include "duplex/text.hpp"

namespace duplex::cassette2 {

struct Node;
using NodePtr = std::shared_ptr<const Node>;

class Descriptor {
 public:
  explicit Descriptor(NodePtr node) : node_(std::move(node)) {}

  const Node& node() const noexcept { return *node_; }
  const NodePtr& ptr() const noexcept { return node_; }

 private:
  NodePtr node_;
};

// Node kinds. The graph is public so that alternative interpreters (tests,
// tracing tools) can walk it.
struct Identity {};
struct Fail {};
struct Seq {
  NodePtr first, second;
};
struct Alt {
  NodePtr first, second;
};
struct Satisfy {
  std::function<bool(char32_t)> pred;
  std::string name;
};
struct Lit {
  Text text;
};
struct LitUnit {
  Text text;
};
struct Lead {
  Prism prism;
};
struct IsoLead {
  Iso iso;
  std::shared_ptr<const Reducer> reducer;
};
struct PairLead {
  std::shared_ptr<const Reducer> reducer;
};
struct Deferred {
  std::function<Descriptor()> make;
  mutable std::once_flag once;
  mutable NodePtr target;

  const Node& resolve() const;
};
struct Knot {
  NodePtr body;  // set once, before the knot is published
};
struct BackEdge {
  std::weak_ptr<const Node> knot;

  const Node& resolve() const;
};

struct Node {
  std::variant<Identity, Fail, Seq, Alt, Satisfy, Lit, LitUnit, Lead, IsoLead, PairLead, Deferred, Knot, BackEdge> kind;
};

// Category and monoid.
Descriptor identity();
Descriptor compose(const Descriptor& a, const Descriptor& b);
Descriptor fail();
Descriptor choice(const Descriptor& a, const Descriptor& b);

// `a >> b` is composition read left to right (also used where a grammar
// separates a lead from its components); `a | b` is choice.
inline Descriptor operator>>(const Descriptor& a, const Descriptor& b) { return compose(a, b); }
inline Descriptor operator|(const Descriptor& a, const Descriptor& b) { return choice(a, b); }

Descriptor satisfy(std::function<bool(char32_t)> pred, std::string name);
Descriptor any_char();
Descriptor digit_char();
Descriptor letter();     // ASCII letter
Descriptor alpha_num();  // ASCII letter or digit

// Nullary literal.
Descriptor lit(TextView s);
// Literal that prints from, and parses to, a Unit on the stack.
Descriptor lit_unit(TextView s);

Descriptor prism_l(Prism p);
Descriptor iso_l(Iso iso);
Descriptor pair_l();
Descriptor cons_l();
Descriptor nil_l();

// Delays building the descriptor until it is first run. Construction happens
// once even under concurrent first use.
Descriptor defer(std::function<Descriptor()> make);

// Ties a recursive knot: `f` receives a reference to the descriptor being
// defined. The reference is weak, so the result owns the whole cycle; the
// reference must not be used once the result is gone.
Descriptor fix(const std::function<Descriptor(const Descriptor& self)>& f);

// many p = some p <> nilL, some p = consL . p . many p
Descriptor many(const Descriptor& p);
Descriptor some(const Descriptor& p);

// optional p = p <> id
Descriptor optional(const Descriptor& p);

// isoL show read . some (satisfy isDigit)
Descriptor integer();

// prismL _True --> lit' "T" <> prismL _False --> lit' "F"
Descriptor boolean();

// Result of running one track to completion.
struct Success {
  Text text;                 // print track output
  std::size_t consumed = 0;  // parse track input consumed
  Stack stack;

  bool operator==(const Success&) const = default;
};

// std::nullopt is recoverable failure. Contract violations throw.
using Outcome = std::optional<Success>;

Outcome run_print(const Descriptor& d, Stack stack);
Outcome run_parse(const Descriptor& d, TextView input, Stack stack = {});

std::optional<Text> pretty(const Descriptor& d, const Value& v);

// Discards unconsumed input.
std::optional<Value> parse(const Descriptor& d, TextView input);

struct Parsed {
  Value value;
  std::size_t consumed = 0;
};
std::optional<Parsed> parse_prefix(const Descriptor& d, TextView input);

}  // namespace duplex::cassette2
