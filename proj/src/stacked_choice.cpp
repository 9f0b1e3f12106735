#include "duplex/stacked/choice.hpp"

namespace duplex::stacked::choice {

namespace {

using Parsed = std::optional<std::pair<Unit, TextView>>;

Parsed unit_parse(TextView s) { return std::pair<Unit, TextView>(Unit{}, s); }

// \a -> k' a: the failure answer that first puts `a` back.
Answer restoring(Answer k1, Value a) {
  return [k1, a](Stack s) { return k1(s.push(a)); };
}

}  // namespace

Action<Unit> shift_(std::function<Action<Answer>(Restore k, Answer k1)> f) {
  return Action<Unit>(
      [f](const Traced<Kont<Unit>>& wk, Answer k1) {
        const Restore k = [kk = wk.extract()](Answer fl) { return kk(Unit{}, std::move(fl)); };
        return f(k, k1).print_side()(
            wk.map([](const Kont<Unit>&) { return Kont<Answer>([](Answer x, Answer) { return x; }); }), k1);
      },
      unit_parse);
}

Action<Unit> push(Value v) {
  // return (k (\_ -> k') x)
  return shift_([v](Restore k, Answer k1) {
    const Answer dropped = [k1](Stack s) { return k1(s.pop("push").second); };
    return ret<Answer>([k, dropped, v](Stack s) { return k(dropped)(s.push(v)); });
  });
}

Action<Unit> pop_() {
  // return (\a -> k (k' a))
  return shift_([](Restore k, Answer k1) {
    return ret<Answer>([k, k1](Stack s) {
      auto [a, rest] = s.pop("pop_");
      return k(restoring(k1, a))(std::move(rest));
    });
  });
}

Action<Unit> stack(std::function<Answer(Answer k1, Answer k)> f, std::function<Answer(Answer k1)> u) {
  // return (f k' (k (u k')))
  return shift_([f, u](Restore k, Answer k1) {
    // The continuation is only built once f commits to it.
    const Answer rest = [k, u, k1](Stack s) { return k(u(k1))(std::move(s)); };
    return ret<Answer>(f(k1, rest));
  });
}

Action<Value> pop() {
  // return (\a -> k a (k' a))
  return shiftw<Value>([](Kont<Value> k, Answer k1) {
    return ret<Answer>([k, k1](Stack s) {
      auto [a, rest] = s.pop("pop");
      return k(a, restoring(k1, a))(std::move(rest));
    });
  });
}

Action<Unit> yield(std::function<Answer(const Traced<Answer>&)> eff) {
  return Action<Unit>(
      [eff](const Traced<Kont<Unit>>& wk, Answer k1) {
        return eff(wk.map([k1](const Kont<Unit>& k) { return k(Unit{}, k1); }));
      },
      unit_parse);
}

Action<Value> satisfy(std::function<bool(char32_t)> pred) {
  const auto printer = pop().bind([](const Value& c) {
    const Text emitted(1, c.as_char());
    return yield([emitted](const Traced<Answer>& w) { return trace(emitted, w); }).then(ret(c));
  });
  return Action<Value>(printer.print_side(), [pred](TextView s) -> std::optional<std::pair<Value, TextView>> {
    if (s.empty() || !pred(s.front())) return std::nullopt;
    return std::pair<Value, TextView>(Value::character(s.front()), s.substr(1));
  });
}

Action<Unit> lit(TextView s) {
  Action<Unit> rest = ret(Unit{});
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    const char32_t c = *it;
    const auto step = push(Value::character(c)).then(satisfy([c](char32_t x) { return x == c; }));
    rest = step.bind([rest](const Value&) { return rest; });
  }
  return rest;
}

Action<Value> any_char() {
  return satisfy([](char32_t) { return true; });
}
Action<Value> letter() { return satisfy(text::is_ascii_letter); }
Action<Value> alpha_num() { return satisfy(text::is_ascii_alnum); }

Action<Value> iso(const Iso& i, const Action<Value>& m) {
  const std::function<Value(Value)> from = [from = i.from](Value v) { return from(v); };
  auto f = [to = i.to, name = i.name](Answer, Answer k) {
    return Answer([k, to, name](Stack s) {
      auto [v, rest] = s.pop(name.c_str());
      return k(rest.push(to(v)));
    });
  };
  auto u = [from = i.from, name = i.name](Answer k1) {
    return Answer([k1, from, name](Stack s) {
      auto [v, rest] = s.pop(name.c_str());
      return k1(rest.push(from(v)));
    });
  };
  return ret(from).skip(stack(f, u)).ap(m);
}

Action<Value> digit() { return iso(digit_iso(), satisfy(text::is_digit)); }

Action<Curried<2>> cons_l() { return prism_l<2>(cons_prism()); }

namespace {

Action<Value> some_of(const Action<Value>& p, const Action<Value>& rest) { return cons_l().ap(p).ap(rest); }

}  // namespace

Action<Value> many(const Action<Value>& p) {
  return fix<Value>([p](const Action<Value>& self) {
    return some_of(p, self) | pop_().then(ret(Value::list(ValueList{})));
  });
}

Action<Value> some(const Action<Value>& p) { return some_of(p, many(p)); }

Action<Value> example_format() {
  const Curried<3> triple = curry<3>([](std::vector<Value> xs) { return tuple(std::move(xs)); });
  return digit()
      .map(triple)
      .skip(lit(U"-th character after "))
      .ap(any_char())
      .skip(lit(U" is "))
      .ap(any_char());
}

}  // namespace duplex::stacked::choice
