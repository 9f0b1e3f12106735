#include "duplex/optics.hpp"

#include <limits>

#include "duplex/error.hpp"

namespace duplex {

Iso identity_iso() {
  auto id = [](const Value& v) { return v; };
  return Iso{"id", id, id};
}

Iso text_chars_iso() {
  return Iso{
      "text",
      [](const Value& v) {
        std::vector<Value> chars;
        for (char32_t c : v.as_text()) chars.push_back(Value::character(c));
        return Value::list(chars);
      },
      [](const Value& v) {
        Text t;
        for (const auto& c : v.as_list()) t.push_back(c.as_char());
        return Value::text(std::move(t));
      },
  };
}

Iso digit_iso() {
  return Iso{
      "digit",
      [](const Value& v) {
        const auto i = v.as_int();
        if (i < 0 || i > 9) throw ContractViolation("digit: " + std::to_string(i) + " is not a single digit");
        return Value::character(static_cast<char32_t>(U'0' + i));
      },
      [](const Value& v) {
        const auto c = v.as_char();
        if (!text::is_digit(c)) throw ContractViolation("digit: " + v.debug() + " is not a digit");
        return Value::integer(c - U'0');
      },
  };
}

Iso decimal_iso() {
  return Iso{
      "decimal",
      [](const Value& v) {
        std::vector<Value> chars;
        for (char c : std::to_string(v.as_int())) chars.push_back(Value::character(static_cast<char32_t>(c)));
        return Value::list(chars);
      },
      [](const Value& v) {
        const auto& l = v.as_list();
        if (l.empty()) throw ContractViolation("decimal: empty digit sequence");
        auto it = l.begin();
        const bool negative = it->as_char() == U'-';
        if (negative) ++it;
        if (it == l.end()) throw ContractViolation("decimal: no digits");
        constexpr auto max = std::numeric_limits<std::int64_t>::max();
        std::int64_t acc = 0;
        for (; it != l.end(); ++it) {
          const auto c = it->as_char();
          if (!text::is_digit(c)) throw ContractViolation("decimal: " + it->debug() + " is not a digit");
          const std::int64_t d = c - U'0';
          if (acc > (max - d) / 10) throw ContractViolation("decimal: literal out of range");
          acc = acc * 10 + d;
        }
        return Value::integer(negative ? -acc : acc);
      },
  };
}

std::array<Value, 2> pair_split(const Value& p) { return {p.first(), p.second()}; }

Value pair_join(Value a, Value b) { return Value::pair(std::move(a), std::move(b)); }

Iso pair_iso() {
  return Iso{
      "pair",
      [](const Value& v) {
        auto [a, b] = pair_split(v);
        return Value::list({a, b});
      },
      [](const Value& v) {
        const auto items = v.list_items();
        if (items.size() != 2) throw ContractViolation("pair: expected two components, got " + v.debug());
        return pair_join(items[0], items[1]);
      },
  };
}

Prism::Prism(std::string tag, std::size_t arity, PreviewFn preview, ReviewFn review)
    : preview_(std::move(preview)) {
  auto checked = [tag, arity, review = std::move(review)](std::vector<Value> xs) {
    if (xs.size() != arity) {
      throw ContractViolation("review " + tag + ": expected " + std::to_string(arity) + " components, got " +
                              std::to_string(xs.size()));
    }
    return review(std::move(xs));
  };
  reducer_ = std::make_shared<const Reducer>(Reducer{std::move(tag), arity, std::move(checked)});
}

Value Prism::review(std::vector<Value> components) const { return reducer_->build(std::move(components)); }

Prism adt_prism(std::string tag, std::size_t arity) {
  return Prism(
      tag, arity,
      [tag, arity](const Value& v) -> std::optional<std::vector<Value>> {
        if (!v.is(Value::Kind::adt) || v.tag() != tag || v.args().size() != arity) return std::nullopt;
        return v.args();
      },
      [tag](std::vector<Value> xs) { return Value::adt(tag, std::move(xs)); });
}

Prism cons_prism() {
  return Prism(
      "cons", 2,
      [](const Value& v) -> std::optional<std::vector<Value>> {
        if (!v.is(Value::Kind::list) || v.as_list().empty()) return std::nullopt;
        const auto& l = v.as_list();
        return std::vector<Value>{l.top(), Value::list(l.pop())};
      },
      [](std::vector<Value> xs) {
        if (!xs[1].is(Value::Kind::list)) throw ContractViolation("review cons: tail is not a list: " + xs[1].debug());
        return Value::cons(std::move(xs[0]), xs[1]);
      });
}

Prism nil_prism() {
  return Prism(
      "nil", 0,
      [](const Value& v) -> std::optional<std::vector<Value>> {
        if (!v.is(Value::Kind::list) || !v.as_list().empty()) return std::nullopt;
        return std::vector<Value>{};
      },
      [](std::vector<Value>) { return Value::list(ValueList{}); });
}

Prism constant_prism(std::string tag, Value v) {
  const std::string name = tag;
  return Prism(
      std::move(tag), 1,
      [v](const Value& x) -> std::optional<std::vector<Value>> {
        if (!(x == v)) return std::nullopt;
        return std::vector<Value>{Value::unit()};
      },
      [v, t = name](std::vector<Value> xs) {
        if (!xs[0].is(Value::Kind::unit)) throw ContractViolation("review " + t + ": expected Unit, got " + xs[0].debug());
        return v;
      });
}

}  // namespace duplex
