#include "duplex/cassette1.hpp"

#include <algorithm>

#include "duplex/error.hpp"

namespace duplex::cassette1 {

namespace {

std::string describe_argument(const StackEntry& e) {
  if (e.origin >= 0) return "argument #" + std::to_string(e.origin + 1) + " (" + e.value().debug() + ")";
  return "value " + e.value().debug();
}

std::string describe_input(const Cursor& c) {
  if (c.pos >= c.input.size()) return "end of input at offset " + std::to_string(c.pos);
  return "'" + text::to_utf8(c.input[c.pos]) + "' at offset " + std::to_string(c.pos);
}

}  // namespace

Descriptor identity() {
  return Descriptor([](PrintK k) { return k; }, [](ParseK k) { return k; }, StackEffect{});
}

Descriptor compose(const Descriptor& a, const Descriptor& b) {
  const auto ea = a.effect();
  const auto eb = b.effect();
  StackEffect e;
  e.pops = ea.pops + (eb.pops > ea.pushes ? eb.pops - ea.pushes : 0);
  e.pushes = eb.pushes + (ea.pushes > eb.pops ? ea.pushes - eb.pops : 0);
  return Descriptor([f = a.print_track(), g = b.print_track()](PrintK k) { return f(g(std::move(k))); },
                    [f = a.parse_track(), g = b.parse_track()](ParseK k) { return f(g(std::move(k))); }, e);
}

Descriptor satisfy(std::function<bool(char32_t)> pred, std::string name) {
  auto print = [pred, name](PrintK k) -> PrintK {
    return [pred, name, k = std::move(k)](Text& out, Stack st) -> Outcome {
      if (st.empty()) throw ContractViolation(name + ": no argument left to print");
      auto [e, rest] = st.pop_entry(name.c_str());
      const auto& v = e.value();
      if (!v.is(Value::Kind::character)) {
        throw ContractViolation(name + ": " + describe_argument(e) + " is not a Char");
      }
      if (!pred(v.as_char())) throw ContractViolation(name + ": " + describe_argument(e) + " rejected");
      out.push_back(v.as_char());
      return k(out, std::move(rest));
    };
  };
  auto parse = [pred, name](ParseK k) -> ParseK {
    return [pred, name, k = std::move(k)](Cursor c, Stack st) -> Outcome {
      if (c.pos >= c.input.size() || !pred(c.input[c.pos])) {
        throw ContractViolation(name + ": unexpected " + describe_input(c));
      }
      const char32_t ch = c.input[c.pos];
      ++c.pos;
      return k(c, st.deliver(Value::character(ch)));
    };
  };
  return Descriptor(std::move(print), std::move(parse), StackEffect{1, 0});
}

Descriptor lit(TextView s) {
  if (s.empty()) return identity();
  Text lit_text(s);
  auto print = [lit_text](PrintK k) -> PrintK {
    return [lit_text, k = std::move(k)](Text& out, Stack st) -> Outcome {
      out += lit_text;
      return k(out, std::move(st));
    };
  };
  auto parse = [lit_text](ParseK k) -> ParseK {
    return [lit_text, k = std::move(k)](Cursor c, Stack st) -> Outcome {
      for (char32_t expected : lit_text) {
        if (c.pos >= c.input.size() || c.input[c.pos] != expected) {
          throw ContractViolation("lit \"" + text::to_utf8(lit_text) + "\": unexpected " + describe_input(c));
        }
        ++c.pos;
      }
      return k(c, std::move(st));
    };
  };
  return Descriptor(std::move(print), std::move(parse), StackEffect{});
}

Descriptor iso_l(Iso iso) {
  auto reducer = std::make_shared<const Reducer>(
      Reducer{iso.name, 1, [from = iso.from](std::vector<Value> xs) { return from(xs[0]); }});
  auto print = [to = iso.to, name = iso.name](PrintK k) -> PrintK {
    return [to, name, k = std::move(k)](Text& out, Stack st) -> Outcome {
      if (st.empty()) throw ContractViolation(name + ": no argument left to print");
      auto [e, rest] = st.pop_entry(name.c_str());
      return k(out, rest.push(to(e.value()), e.origin));
    };
  };
  auto parse = [reducer](ParseK k) -> ParseK {
    return [reducer, k = std::move(k)](Cursor c, Stack st) -> Outcome { return k(c, st.open(reducer)); };
  };
  return Descriptor(std::move(print), std::move(parse), StackEffect{1, 1});
}

Descriptor pair_l() {
  auto reducer = std::make_shared<const Reducer>(
      Reducer{"pair", 2, [](std::vector<Value> xs) { return pair_join(std::move(xs[0]), std::move(xs[1])); }});
  auto print = [](PrintK k) -> PrintK {
    return [k = std::move(k)](Text& out, Stack st) -> Outcome {
      if (st.empty()) throw ContractViolation("pairL: no argument left to print");
      auto [e, rest] = st.pop_entry("pairL");
      if (!e.value().is(Value::Kind::pair)) throw ContractViolation("pairL: " + describe_argument(e) + " is not a Pair");
      auto [a, b] = pair_split(e.value());
      return k(out, rest.push(std::move(b), e.origin).push(std::move(a), e.origin));
    };
  };
  auto parse = [reducer](ParseK k) -> ParseK {
    return [reducer, k = std::move(k)](Cursor c, Stack st) -> Outcome { return k(c, st.open(reducer)); };
  };
  return Descriptor(std::move(print), std::move(parse), StackEffect{1, 2});
}

Descriptor any_char() {
  return satisfy([](char32_t) { return true; }, "char");
}

Descriptor digit() { return compose(iso_l(digit_iso()), satisfy(text::is_digit, "isDigit")); }

Descriptor example_format() {
  return digit() >> lit(U"-th character after ") >> any_char() >> lit(U" is ") >> any_char();
}

Outcome run_print(const Descriptor& d, std::span<const Value> args) {
  Stack st;
  for (std::size_t i = args.size(); i-- > 0;) st = st.push(args[i], static_cast<int>(i));
  Text out;
  try {
    const auto k = d.print_track()([](Text& o, Stack s) -> Outcome { return Done{o, 0, std::move(s)}; });
    return k(out, std::move(st));
  } catch (const ContractViolation& e) {
    return Violation{e.what()};
  }
}

Outcome run_parse(const Descriptor& d, TextView input) {
  try {
    const auto k = d.parse_track()([](Cursor c, Stack s) -> Outcome { return Done{{}, c.pos, std::move(s)}; });
    return k(Cursor{input, 0}, Stack{});
  } catch (const ContractViolation& e) {
    return Violation{e.what()};
  }
}

Text format(const Descriptor& d, std::span<const Value> args) {
  const auto e = d.effect();
  if (e.pushes != 0 || args.size() != e.pops) {
    throw ContractViolation("format: descriptor takes " + std::to_string(e.pops) + " argument(s), got " +
                            std::to_string(args.size()));
  }
  auto outcome = run_print(d, args);
  if (auto v = std::get_if<Violation>(&outcome)) throw ContractViolation(v->diagnostic);
  return std::get<Done>(std::move(outcome)).text;
}

std::vector<Value> scan(const Descriptor& d, TextView input) {
  auto outcome = run_parse(d, input);
  if (auto v = std::get_if<Violation>(&outcome)) throw ContractViolation(v->diagnostic);
  const auto& done = std::get<Done>(outcome);
  std::vector<Value> values;
  for (const auto& e : done.stack) {
    if (!e.is_value()) throw ContractViolation("scan: descriptor left an incomplete " + e.pending().reducer->tag);
    values.push_back(e.value());
  }
  std::reverse(values.begin(), values.end());
  return values;
}

}  // namespace duplex::cassette1
