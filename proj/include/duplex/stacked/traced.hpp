#pragma once

// Shared pieces of the stacked engines: the Traced comonad over Text and
// curried constructor functions.

#include <cstddef>
#include <functional>
#include <memory>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "duplex/text.hpp"
#include "duplex/value.hpp"

namespace duplex::stacked {

using Unit = std::monostate;

// A function object with shared, immutable state. Descriptors capture each
// other by value all the time; with std::function every copy would clone the
// whole closure tree below it.
template <class Sig>
class Fn;

template <class R, class... Args>
class Fn<R(Args...)> {
 public:
  Fn() = default;

  template <class F>
    requires(!std::is_same_v<std::decay_t<F>, Fn> && std::is_invocable_r_v<R, const std::decay_t<F>&, Args...>)
  Fn(F f) : impl_(std::make_shared<const std::function<R(Args...)>>(std::move(f))) {}

  R operator()(Args... args) const { return (*impl_)(std::forward<Args>(args)...); }

 private:
  std::shared_ptr<const std::function<R(Args...)>> impl_;
};

// A value that depends on the text emitted so far.
//   extract t    = t ""
//   extend f t   = Traced \m -> f (Traced \m' -> t (m <> m'))
template <class X>
class Traced {
 public:
  using Run = Fn<X(const Text&)>;

  Traced() = default;
  explicit Traced(Run run) : run_(std::move(run)) {}

  X operator()(const Text& m) const { return run_(m); }
  X extract() const { return run_(Text{}); }

  template <class F>
  auto extend(F f) const -> Traced<std::invoke_result_t<F, const Traced<X>&>> {
    using B = std::invoke_result_t<F, const Traced<X>&>;
    return Traced<B>([run = run_, f = std::move(f)](const Text& m) {
      return f(Traced<X>([run, m](const Text& m2) { return run(m + m2); }));
    });
  }

  template <class F>
  auto map(F f) const -> Traced<std::invoke_result_t<F, const X&>> {
    using B = std::invoke_result_t<F, const X&>;
    return Traced<B>([run = run_, f = std::move(f)](const Text& m) { return f(run(m)); });
  }

 private:
  Run run_;
};

template <class X>
X trace(const Text& s, const Traced<X>& w) {
  return w(s);
}

// Curried<0> = Value, Curried<n> = Value -> Curried<n-1>.
template <std::size_t N>
struct CurriedT {
  using type = std::function<typename CurriedT<N - 1>::type(Value)>;
};
template <>
struct CurriedT<0> {
  using type = Value;
};
template <std::size_t N>
using Curried = typename CurriedT<N>::type;

namespace detail {

template <std::size_t N>
Curried<N> curry_from(std::function<Value(std::vector<Value>)> build, std::vector<Value> got) {
  if constexpr (N == 0) {
    return build(std::move(got));
  } else {
    return [build = std::move(build), got = std::move(got)](Value v) {
      auto next = got;
      next.push_back(std::move(v));
      return curry_from<N - 1>(build, std::move(next));
    };
  }
}

}  // namespace detail

// Turns an N-ary builder into a curried function of N Values.
template <std::size_t N>
Curried<N> curry(std::function<Value(std::vector<Value>)> build) {
  return detail::curry_from<N>(std::move(build), {});
}

}  // namespace duplex::stacked
