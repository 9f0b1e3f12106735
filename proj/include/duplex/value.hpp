#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "duplex/persistent.hpp"
#include "duplex/text.hpp"

namespace duplex {

class Value;

// Lists share structure: prepending and splitting off the head are O(1),
// which is what list leads do on every repetition step.
using ValueList = detail::Chain<Value>;

// The universal datum flowing through descriptors and stacks.
class Value {
 public:
  enum class Kind { unit, boolean, integer, character, text, list, pair, adt };

  struct Unit {
    bool operator==(const Unit&) const = default;
  };

  struct PairRep;
  struct AdtRep;

  Value() = default;  // Unit

  static Value unit() { return Value(); }
  static Value boolean(bool b) { return Value(Rep(b)); }
  static Value integer(std::int64_t i) { return Value(Rep(i)); }
  static Value character(char32_t c) { return Value(Rep(c)); }
  static Value text(Text t);
  static Value text_utf8(std::string_view utf8);
  static Value list(std::span<const Value> items);
  static Value list(std::initializer_list<Value> items);
  static Value list(ValueList items) { return Value(Rep(std::move(items))); }
  static Value pair(Value first, Value second);
  static Value adt(std::string tag, std::vector<Value> args);

  static Value cons(Value head, const Value& tail);

  Kind kind() const noexcept { return static_cast<Kind>(rep_.index()); }
  bool is(Kind k) const noexcept { return kind() == k; }

  // Accessors throw ContractViolation on the wrong kind.
  bool as_bool() const;
  std::int64_t as_int() const;
  char32_t as_char() const;
  const Text& as_text() const;
  const ValueList& as_list() const;
  std::vector<Value> list_items() const;
  const Value& first() const;
  const Value& second() const;
  const std::string& tag() const;
  const std::vector<Value>& args() const;

  // Deep structural equality.
  bool operator==(const Value& other) const;

  // Stable and injective: equal strings iff structurally equal values.
  std::string debug() const;

 private:
  using Rep = std::variant<Unit, bool, std::int64_t, char32_t, std::shared_ptr<const Text>, ValueList,
                           std::shared_ptr<const PairRep>, std::shared_ptr<const AdtRep>>;

  explicit Value(Rep r) : rep_(std::move(r)) {}

  Rep rep_;
};

struct Value::PairRep {
  Value first;
  Value second;
};

struct Value::AdtRep {
  std::string tag;
  std::vector<Value> args;
};

const char* kind_name(Value::Kind k);

// Tuples are the constructor applications `(,)`, `(,,)`, ...
Value tuple(std::vector<Value> items);

}  // namespace duplex
