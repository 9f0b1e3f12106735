#include <gtest/gtest.h>

#include "duplex/error.hpp"
#include "duplex/stacked/linear.hpp"

using namespace duplex;
using namespace duplex::stacked;
using namespace duplex::stacked::linear;

namespace {

const std::vector<Value> kArgs = {Value::integer(5), Value::character(U'a'), Value::character(U'f')};

// Runs a printer and also captures its monadic result.
template <class A>
std::pair<Text, A> print_with_result(const Action<A>& d, Stack st) {
  std::optional<A> result;
  const Traced<Kont<A>> done([&result](const Text& s) {
    return Kont<A>([&result, s](A a) {
      result = a;
      return Answer([s](Stack) { return s; });
    });
  });
  auto text = d.print_side()(done)(std::move(st));
  return {text, *result};
}

}  // namespace

TEST(StackedLinear, FormatsTheOrdinalExample) {
  EXPECT_EQ(linear::sprintf(example_format(), kArgs), U"5-th character after a is f");
}

TEST(StackedLinear, ScansTheOrdinalExampleAsATriple) {
  const auto v = sscanf(example_format(), U"5-th character after a is f");
  EXPECT_EQ(v, tuple(kArgs));
  EXPECT_EQ(v.debug(), "(5, 'a', 'f')");
}

TEST(StackedLinear, ScanMismatchIsAViolation) {
  EXPECT_THROW(sscanf(example_format(), U"5-th character after a iz f"), ContractViolation);
  EXPECT_THROW(sscanf(example_format(), U"5"), ContractViolation);
}

TEST(StackedLinear, ReturnThenBind) {
  const auto m = ret(Value::integer(3)).bind([](const Value& v) { return ret(Value::integer(v.as_int() + 1)); });
  EXPECT_EQ(sscanf(m, U""), Value::integer(4));
  EXPECT_EQ(print_with_result(m, Stack()).second, Value::integer(4));
}

TEST(StackedLinear, YieldEmitsInOrder) {
  auto emit = [](Text s) {
    return yield([s](const Traced<Answer>& w) { return trace(s, w); });
  };
  EXPECT_EQ(print_with_result(emit(U"ab").then(emit(U"c")), Stack()).first, U"abc");
  EXPECT_EQ(print_with_result(emit(U""), Stack()).first, U"");
}

TEST(StackedLinear, PushThenPopReturnsTheValue) {
  const auto m = push(Value::integer(9)).then(pop());
  const auto [text, v] = print_with_result(m, Stack());
  EXPECT_EQ(v, Value::integer(9));
  EXPECT_EQ(text, U"");
}

TEST(StackedLinear, PopDiscardsTheTop) {
  // After pop_, the next pop sees the second entry.
  const auto m = pop_().then(pop());
  EXPECT_EQ(print_with_result(m, Stack::of({Value::integer(1), Value::integer(2)})).second, Value::integer(2));
  EXPECT_THROW(print_with_result(pop_(), Stack()), ContractViolation);
}

TEST(StackedLinear, CurryStackPairsTheTopTwo) {
  const auto m = curry_stack().then(pop());
  const auto v = print_with_result(m, Stack::of({Value::integer(1), Value::integer(2)})).second;
  EXPECT_EQ(v, Value::pair(Value::integer(1), Value::integer(2)));
}

TEST(StackedLinear, ParseIgnoresStackOperations) {
  const auto m = push(Value::integer(1)).then(pop_()).then(curry_stack()).then(any_char());
  EXPECT_EQ(sscanf(m, U"z"), Value::character(U'z'));
}

TEST(StackedLinear, LitNeedsNoArgument) {
  EXPECT_EQ(linear::sprintf(lit(U"hey"), std::vector<Value>{}), U"hey");
  EXPECT_EQ(linear::sprintf(lit(U""), std::vector<Value>{}), U"");
}

TEST(StackedLinear, DigitOutOfRangeIsAViolation) {
  const std::vector<Value> args = {Value::integer(10)};
  EXPECT_THROW(linear::sprintf(digit(), args), ContractViolation);
}

TEST(StackedLinear, OutputIsInsensitiveToLowerStack) {
  const auto m = any_char().skip(lit(U"!"));
  const auto a = print_with_result(m, Stack::of({Value::character(U'x')}));
  const auto b = print_with_result(m, Stack::of({Value::character(U'x'), Value::integer(1), Value::unit()}));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.first, U"x!");
}
