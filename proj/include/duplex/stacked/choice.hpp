#pragma once

// Tier 3, choice variant: stacked indexed monads with two continuations.
//
// The printer receives a success continuation (wrapped in Traced) and a
// failure answer. Failure answers are stack consumers like any other answer,
// so every stack operation that runs before a failure must hand downstream a
// failure answer that first restores the stack it found. push, pop_, pop and
// `stack` do this through their unrolling argument.
//
// Choice is left-biased on both sides. The printer backtracks into the right
// alternative whenever anything downstream fails; the parser is local: once
// an alternative succeeds, later failures do not revisit it.
//
// Recursive actions are built with `fix`.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>

#include "duplex/error.hpp"
#include "duplex/optics.hpp"
#include "duplex/stack.hpp"
#include "duplex/stacked/traced.hpp"

namespace duplex::stacked::choice {

// r: consumes the remaining stack, produces the text or nothing.
using Answer = Fn<std::optional<Text>(Stack)>;
// a -> r -> r
template <class A>
using Kont = Fn<Answer(A, Answer)>;
// w (a -> r -> r) -> r' -> r'
template <class A>
using PrintSide = Fn<Answer(const Traced<Kont<A>>&, Answer)>;
// String -> Maybe (a, String)
template <class A>
using ParseSide = Fn<std::optional<std::pair<A, TextView>>(TextView)>;

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
    PrintSide<B> pr = [pr = print_, f](const Traced<Kont<B>>& wk, Answer fl) {
      return pr(wk.extend([f](const Traced<Kont<B>>& w) -> Kont<A> {
        return [f, w](A x, Answer fl2) { return f(x).print_side()(w, std::move(fl2)); };
      }),
                std::move(fl));
    };
    ParseSide<B> pa = [pa = parse_, f](TextView s) -> std::optional<std::pair<B, TextView>> {
      auto r = pa(s);
      if (!r) return std::nullopt;
      return f(r->first).parse_side()(r->second);
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
  return Action<A>([x](const Traced<Kont<A>>& wk, Answer fl) { return wk.extract()(x, std::move(fl)); },
                   [x](TextView s) { return std::optional<std::pair<A, TextView>>(std::pair<A, TextView>(x, s)); });
}

// mempty
template <class A>
Action<A> fail() {
  return Action<A>([](const Traced<Kont<A>>&, Answer fl) { return fl; },
                   [](TextView) -> std::optional<std::pair<A, TextView>> { return std::nullopt; });
}

// a <> b
template <class A>
Action<A> alt(const Action<A>& a, const Action<A>& b) {
  return Action<A>(
      [pa = a.print_side(), pb = b.print_side()](const Traced<Kont<A>>& wk, Answer fl) {
        return pa(wk, pb(wk, std::move(fl)));
      },
      [qa = a.parse_side(), qb = b.parse_side()](TextView s) {
        auto r = qa(s);
        return r ? r : qb(s);
      });
}

template <class A>
Action<A> operator|(const Action<A>& a, const Action<A>& b) {
  return alt(a, b);
}

// Ties a recursive knot. The reference handed to `f` holds the knot weakly;
// the returned action owns it.
template <class A>
Action<A> fix(const std::function<Action<A>(const Action<A>& self)>& f) {
  auto cell = std::make_shared<std::optional<Action<A>>>();
  std::weak_ptr<std::optional<Action<A>>> weak = cell;
  auto resolve = [](const std::shared_ptr<std::optional<Action<A>>>& c) -> const Action<A>& {
    if (!c || !*c) throw ContractViolation("fix: recursive reference used outside its definition");
    return **c;
  };
  const Action<A> self(
      [weak, resolve](const Traced<Kont<A>>& wk, Answer fl) { return resolve(weak.lock()).print_side()(wk, std::move(fl)); },
      [weak, resolve](TextView s) { return resolve(weak.lock()).parse_side()(s); });
  *cell = f(self);
  return Action<A>(
      [cell, resolve](const Traced<Kont<A>>& wk, Answer fl) { return resolve(cell).print_side()(wk, std::move(fl)); },
      [cell, resolve](TextView s) { return resolve(cell).parse_side()(s); });
}

using Restore = Fn<Answer(Answer)>;

// shift_ f: f receives the continuation (still waiting for its failure
// answer) and the failure answer of the action.
Action<Unit> shift_(std::function<Action<Answer>(Restore k, Answer k1)> f);

// shiftw f: the continuation also expects the result. Printer only.
template <class A>
Action<A> shiftw(std::function<Action<Answer>(Kont<A> k, Answer k1)> f) {
  return Action<A>(
      [f](const Traced<Kont<A>>& wk, Answer k1) {
        return f(wk.extract(), k1)
            .print_side()(wk.map([](const Kont<A>&) { return Kont<Answer>([](Answer x, Answer) { return x; }); }), k1);
      },
      [](TextView) -> std::optional<std::pair<A, TextView>> { throw ContractViolation("shiftw: no parse side"); });
}

Action<Unit> push(Value v);
Action<Unit> pop_();
// stack f u: f rewrites the stack or declares failure through its first
// argument; u restores the original stack from the rewritten one.
Action<Unit> stack(std::function<Answer(Answer k1, Answer k)> f, std::function<Answer(Answer k1)> u);
// Printer only; the restoring answer re-pushes the popped value.
Action<Value> pop();

Action<Unit> yield(std::function<Answer(const Traced<Answer>&)> eff);

// The printer pops a Char and emits it without consulting `pred`.
Action<Value> satisfy(std::function<bool(char32_t)> pred);
Action<Unit> lit(TextView s);
Action<Value> any_char();
Action<Value> letter();
Action<Value> alpha_num();
Action<Value> digit();

// return iso.from <* stack (iso.to on top) <*> m
Action<Value> iso(const Iso& i, const Action<Value>& m);

// stack rev u *> return (review p), the result curried over N components.
template <std::size_t N>
Action<Curried<N>> prism_l(const Prism& p) {
  if (p.arity() != N) {
    throw ContractViolation("prismL " + p.tag() + ": arity " + std::to_string(p.arity()) + ", expected " +
                            std::to_string(N));
  }
  auto rev = [p](Answer k1, Answer k) {
    return Answer([p, k1, k](Stack s) {
      auto [t, rest] = s.pop(p.tag().c_str());
      auto xs = p.preview(t);
      if (!xs) return k1(rest.push(std::move(t)));
      for (auto it = xs->rbegin(); it != xs->rend(); ++it) rest = rest.push(std::move(*it));
      return k(std::move(rest));
    });
  };
  auto u = [p](Answer k1) {
    return Answer([p, k1](Stack s) {
      std::vector<Value> xs;
      for (std::size_t i = 0; i < N; ++i) {
        auto [x, rest] = s.pop(p.tag().c_str());
        xs.push_back(std::move(x));
        s = std::move(rest);
      }
      return k1(s.push(p.review(std::move(xs))));
    });
  };
  auto review = [reducer = p.reducer()](std::vector<Value> xs) { return reducer->build(std::move(xs)); };
  return stack(rev, u).then(ret<Curried<N>>(curry<N>(review)));
}

Action<Curried<2>> cons_l();

// some p = consL <*> p <*> many p
// many p = some p <> (pop_ *> return [])
Action<Value> some(const Action<Value>& p);
Action<Value> many(const Action<Value>& p);

// (,,) <$> digit <* lit "-th character after " <*> char <* lit " is " <*> char
Action<Value> example_format();

// Runners. parse discards unconsumed input.
template <class A>
std::optional<A> parse(const Action<A>& d, TextView input) {
  auto r = d.parse_side()(input);
  if (!r) return std::nullopt;
  return std::move(r->first);
}

template <class A>
std::optional<std::pair<A, std::size_t>> parse_prefix(const Action<A>& d, TextView input) {
  auto r = d.parse_side()(input);
  if (!r) return std::nullopt;
  return std::pair<A, std::size_t>(std::move(r->first), input.size() - r->second.size());
}

// pr (Traced \s _ _ -> Just s) (\_ -> Nothing), applied to the stack.
template <class A>
std::optional<Text> run_print(const Action<A>& d, Stack st) {
  const Traced<Kont<A>> done([](const Text& s) {
    return Kont<A>([s](A, Answer) { return Answer([s](Stack) { return std::optional<Text>(s); }); });
  });
  const Answer nothing = [](Stack) { return std::optional<Text>(); };
  return d.print_side()(done, nothing)(std::move(st));
}

template <class A>
std::optional<Text> pretty(const Action<A>& d, const Value& v) {
  return run_print(d, Stack::of({v}));
}

}  // namespace duplex::stacked::choice
