#include "duplex/stacked/linear.hpp"

namespace duplex::stacked::linear {

Action<Unit> shift_(std::function<Action<Answer>(Answer k)> f) {
  return Action<Unit>(
      [f](const Traced<Kont<Unit>>& wk) {
        return f(wk.extract()(Unit{})).print_side()(
            wk.map([](const Kont<Unit>&) { return Kont<Answer>([](Answer x) { return x; }); }));
      },
      [](TextView s) { return std::pair<Unit, TextView>(Unit{}, s); });
}

Action<Unit> push(Value v) {
  return shift_([v](Answer k) { return ret<Answer>([k, v](Stack s) { return k(s.push(v)); }); });
}

Action<Unit> pop_() {
  return shift_([](Answer k) { return ret<Answer>([k](Stack s) { return k(s.pop("pop_").second); }); });
}

Action<Unit> stack(std::function<Answer(Answer)> f) {
  return shift_([f](Answer k) { return ret<Answer>(f(k)); });
}

Action<Unit> curry_stack() {
  return stack([](Answer k) {
    return Answer([k](Stack s) {
      auto [a, s1] = s.pop("curryStack");
      auto [b, s2] = s1.pop("curryStack");
      return k(s2.push(Value::pair(std::move(a), std::move(b))));
    });
  });
}

Action<Value> pop() {
  return shiftw<Value>([](Kont<Value> k) {
    return ret<Answer>([k](Stack s) {
      auto [a, rest] = s.pop("pop");
      return k(a)(rest);
    });
  });
}

Action<Unit> yield(std::function<Answer(const Traced<Answer>&)> eff) {
  return Action<Unit>([eff](const Traced<Kont<Unit>>& wk) { return eff(wk.map([](const Kont<Unit>& k) { return k(Unit{}); })); },
                      [](TextView s) { return std::pair<Unit, TextView>(Unit{}, s); });
}

Action<Value> satisfy(std::function<bool(char32_t)> pred, std::string name) {
  const auto printer = pop().bind([](const Value& c) {
    const Text emitted(1, c.as_char());
    return yield([emitted](const Traced<Answer>& w) { return trace(emitted, w); }).then(ret(c));
  });
  return Action<Value>(printer.print_side(), [pred, name](TextView s) {
    if (s.empty() || !pred(s.front())) {
      throw ContractViolation(name + ": unexpected " + (s.empty() ? "end of input" : "'" + text::to_utf8(s.front()) + "'"));
    }
    return std::pair<Value, TextView>(Value::character(s.front()), s.substr(1));
  });
}

Action<Unit> lit(TextView s) {
  // lit (c : cs) = push c *> satisfy (== c) >>= \_ -> lit cs
  Action<Unit> rest = ret(Unit{});
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    const char32_t c = *it;
    const auto step = push(Value::character(c)).then(satisfy([c](char32_t x) { return x == c; }, "lit"));
    rest = step.bind([rest](const Value&) { return rest; });
  }
  return rest;
}

Action<Value> any_char() {
  return satisfy([](char32_t) { return true; }, "char");
}
Action<Value> letter() { return satisfy(text::is_ascii_letter, "letter"); }
Action<Value> alpha_num() { return satisfy(text::is_ascii_alnum, "alphaNum"); }

Action<Value> iso(const Iso& i, const Action<Value>& m) {
  const std::function<Value(Value)> from = [from = i.from](Value v) { return from(v); };
  const auto rewrite = stack([to = i.to, name = i.name](Answer k) {
    return Answer([k, to, name](Stack s) {
      auto [v, rest] = s.pop(name.c_str());
      return k(rest.push(to(v)));
    });
  });
  return ret(from).skip(rewrite).ap(m);
}

Action<Value> digit() { return iso(digit_iso(), satisfy(text::is_digit, "isDigit")); }

Action<Value> example_format() {
  const Curried<3> triple = curry<3>([](std::vector<Value> xs) { return tuple(std::move(xs)); });
  return digit()
      .map(triple)
      .skip(lit(U"-th character after "))
      .ap(any_char())
      .skip(lit(U" is "))
      .ap(any_char());
}

}  // namespace duplex::stacked::linear
