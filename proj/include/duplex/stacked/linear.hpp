#pragma once

// Tier 3, linear variant: format descriptors as stacked indexed monads.
//
// An action pairs a printer in the comonad-enriched continuation monad with a
// forward parser. The printer's answer type is a stack consumer: it receives
// the runtime stack and returns the text emitted by the whole run. Stack
// operations only affect the printer; the parser ignores them.
//
// There is no failure: a parse mismatch or a malformed stack is a contract
// violation.

#include <functional>
#include <span>
#include <string>
#include <type_traits>
#include <utility>

#include "duplex/error.hpp"
#include "duplex/optics.hpp"
#include "duplex/stack.hpp"
#include "duplex/stacked/traced.hpp"

namespace duplex::stacked::linear {

// r: consumes the remaining stack, produces the final text.
using Answer = Fn<Text(Stack)>;
// a -> r
template <class A>
using Kont = Fn<Answer(A)>;
// w (a -> r) -> r'
template <class A>
using PrintSide = Fn<Answer(const Traced<Kont<A>>&)>;
// String -> (a, String)
template <class A>
using ParseSide = Fn<std::pair<A, TextView>(TextView)>;

template <class A>
class Action;

template <class A>
Action<A> ret(A x);

template <class A>
class Action {
 public:
  using result_type = A;

  Action(PrintSide<A> print, ParseSide<A> parse) : print_(std::move(print)), parse_(std::move(parse)) {}

  const PrintSide<A>& print_side() const noexcept { return print_; }
  const ParseSide<A>& parse_side() const noexcept { return parse_; }

  // m >>= f
  template <class F>
  auto bind(F f) const {
    using B = typename std::invoke_result_t<F, const A&>::result_type;
    PrintSide<B> pr = [pr = print_, f](const Traced<Kont<B>>& wk) {
      return pr(wk.extend([f](const Traced<Kont<B>>& w) -> Kont<A> {
        return [f, w](A x) { return f(x).print_side()(w); };
      }));
    };
    ParseSide<B> pa = [pa = parse_, f](TextView s) {
      auto [a, rest] = pa(s);
      return f(a).parse_side()(rest);
    };
    return Action<B>(std::move(pr), std::move(pa));
  }

  // f <$> m
  template <class F>
  auto map(F f) const {
    using B = std::invoke_result_t<F, const A&>;
    return bind([f](const A& a) { return ret<B>(f(a)); });
  }

  // m <* next
  template <class B>
  Action<A> skip(const Action<B>& next) const {
    return bind([next](const A& a) { return next.map([a](const B&) { return a; }); });
  }

  // m *> next
  template <class B>
  Action<B> then(const Action<B>& next) const {
    return bind([next](const A&) { return next; });
  }

  // m <*> arg, where m yields a function
  template <class B>
  auto ap(const Action<B>& arg) const {
    return bind([arg](const A& fn) { return arg.map([fn](const B& b) { return fn(b); }); });
  }

 private:
  PrintSide<A> print_;
  ParseSide<A> parse_;
};

template <class A>
Action<A> ret(A x) {
  return Action<A>([x](const Traced<Kont<A>>& wk) { return wk.extract()(x); },
                   [x](TextView s) { return std::pair<A, TextView>(x, s); });
}

// shift_ f: f receives the continuation as a stack consumer and returns an
// action computing the consumer to use in its place.
Action<Unit> shift_(std::function<Action<Answer>(Answer k)> f);

// shiftw f: like shift_ but the continuation still expects the result.
// Printer only; the parse side is a contract violation.
template <class A>
Action<A> shiftw(std::function<Action<Answer>(Kont<A> k)> f) {
  return Action<A>(
      [f](const Traced<Kont<A>>& wk) {
        return f(wk.extract()).print_side()(wk.map([](const Kont<A>&) { return Kont<Answer>([](Answer x) { return x; }); }));
      },
      [](TextView) -> std::pair<A, TextView> { throw ContractViolation("shiftw: no parse side"); });
}

Action<Unit> push(Value v);
Action<Unit> pop_();
// stack f: rewrites the top of the print-side stack.
Action<Unit> stack(std::function<Answer(Answer)> f);
// stack \k a b -> k (a, b)
Action<Unit> curry_stack();
// Printer only.
Action<Value> pop();

// Appends to the output through the Traced comonad.
Action<Unit> yield(std::function<Answer(const Traced<Answer>&)> eff);

// The printer pops a Char and emits it without consulting `pred`.
Action<Value> satisfy(std::function<bool(char32_t)> pred, std::string name);
Action<Unit> lit(TextView s);
Action<Value> any_char();
Action<Value> letter();
Action<Value> alpha_num();

// return iso.from <* stack (iso.to on top) <*> m
Action<Value> iso(const Iso& i, const Action<Value>& m);

// Int 0..9 through one digit character.
Action<Value> digit();

// (,,) <$> digit <* lit "-th character after " <*> char <* lit " is " <*> char
Action<Value> example_format();

// Runs the printer on the given arguments, first argument on top.
template <class A>
Text sprintf(const Action<A>& d, std::span<const Value> args) {
  const Traced<Kont<A>> done([](const Text& s) { return Kont<A>([s](A) { return Answer([s](Stack) { return s; }); }); });
  return d.print_side()(done)(Stack::of(args));
}

template <class A>
A sscanf(const Action<A>& d, TextView input) {
  return d.parse_side()(input).first;
}

}  // namespace duplex::stacked::linear
