#include "support/gen.hpp"

namespace duplex::gen {

Value random_value(Rng& rng, int depth) {
  const auto leaf_kinds = 5;
  const auto kinds = depth <= 0 ? leaf_kinds : 8;
  switch (rng.range(0, kinds - 1)) {
    case 0: return Value::unit();
    case 1: return Value::boolean(rng.coin());
    case 2: return Value::integer(rng.range(-1000, 1000));
    case 3: return Value::character(static_cast<char32_t>(rng.range(U'a', U'z')));
    case 4: {
      Text t;
      for (auto n = rng.range(0, 3); n > 0; --n) t.push_back(static_cast<char32_t>(rng.range(U'a', U'z')));
      return Value::text(t);
    }
    case 5: {
      std::vector<Value> xs;
      for (auto n = rng.range(0, 3); n > 0; --n) xs.push_back(random_value(rng, depth - 1));
      return Value::list(xs);
    }
    case 6: return Value::pair(random_value(rng, depth - 1), random_value(rng, depth - 1));
    default: {
      std::vector<Value> xs;
      for (auto n = rng.range(0, 2); n > 0; --n) xs.push_back(random_value(rng, depth - 1));
      return Value::adt(rng.coin() ? "Foo" : "Bar", std::move(xs));
    }
  }
}

std::string random_identifier(Rng& rng) {
  static const std::string tail_chars = "abcdefghijklmnopqrstuvwxyz0123456789";
  std::string s(1, static_cast<char>(rng.range('a', 'z')));
  for (auto n = rng.range(0, 3); n > 0; --n) {
    s.push_back(tail_chars[static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(tail_chars.size()) - 1))]);
  }
  return s;
}

Value random_term(Rng& rng, int depth) {
  const auto choice = depth <= 1 ? 0 : rng.range(0, 2);
  switch (choice) {
    case 0: return Value::adt("Var", {Value::text_utf8(random_identifier(rng))});
    case 1: return Value::adt("Abs", {Value::text_utf8(random_identifier(rng)), random_term(rng, depth - 1)});
    default: return Value::adt("App", {random_term(rng, depth - 1), random_term(rng, depth - 1)});
  }
}

std::vector<Value> enumerate_values(int depth, const std::vector<std::string>& tags) {
  std::vector<Value> out = {
      Value::unit(),           Value::boolean(false),     Value::boolean(true),
      Value::integer(0),       Value::integer(7),         Value::integer(-3),
      Value::character(U'a'),  Value::character(U'0'),    Value::text(U""),
      Value::text(U"ab"),      Value::list(ValueList{}),
  };
  for (const auto& t : tags) out.push_back(Value::adt(t, {}));
  if (depth <= 1) return out;
  const auto smaller = enumerate_values(depth - 1, tags);
  // Thin the compound layer so that depth 3 stays in the low thousands.
  std::vector<Value> sample;
  for (std::size_t i = 0; i < smaller.size(); i += (depth > 2 ? 7 : 1)) sample.push_back(smaller[i]);
  for (const auto& a : sample) {
    out.push_back(Value::list({a}));
    for (const auto& t : tags) out.push_back(Value::adt(t, {a}));
  }
  for (std::size_t i = 0; i < sample.size(); i += 3) {
    for (std::size_t j = 0; j < sample.size(); j += 3) {
      out.push_back(Value::pair(sample[i], sample[j]));
      out.push_back(Value::list({sample[i], sample[j]}));
      for (const auto& t : tags) out.push_back(Value::adt(t, {sample[i], sample[j]}));
    }
  }
  return out;
}

}  // namespace duplex::gen
