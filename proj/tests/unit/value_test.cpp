#include <gtest/gtest.h>

#include "duplex/error.hpp"
#include "duplex/text.hpp"
#include "duplex/value.hpp"
#include "duplex/value_json.hpp"
#include "support/gen.hpp"

using namespace duplex;

TEST(Text, Utf8RoundTrip) {
  const std::string s = "λx.(x x) \xF0\x9F\x98\x80";
  const auto t = text::from_utf8(s);
  EXPECT_EQ(t.size(), 10u);
  EXPECT_EQ(t[0], U'λ');
  EXPECT_EQ(text::to_utf8(t), s);
}

TEST(Text, RejectsMalformedUtf8) {
  EXPECT_THROW(text::from_utf8("\xC3"), ContractViolation);
  EXPECT_THROW(text::from_utf8("\xC0\x80"), ContractViolation);      // overlong
  EXPECT_THROW(text::from_utf8("\xED\xA0\x80"), ContractViolation);  // surrogate
  EXPECT_THROW(text::from_utf8("\xFF"), ContractViolation);
  EXPECT_THROW(text::from_utf8("\xE2\x82"), ContractViolation);
}

TEST(Text, CharacterClasses) {
  EXPECT_TRUE(text::is_digit(U'0'));
  EXPECT_TRUE(text::is_digit(U'9'));
  EXPECT_FALSE(text::is_digit(U'a'));
  EXPECT_FALSE(text::is_digit(U'٣'));
  EXPECT_TRUE(text::is_ascii_letter(U'Z'));
  EXPECT_FALSE(text::is_ascii_letter(U'λ'));
  EXPECT_TRUE(text::is_ascii_alnum(U'7'));
  EXPECT_FALSE(text::is_ascii_alnum(U'_'));
}

TEST(Value, KindsAndAccessors) {
  EXPECT_TRUE(Value().is(Value::Kind::unit));
  EXPECT_EQ(Value::integer(-4).as_int(), -4);
  EXPECT_EQ(Value::character(U'q').as_char(), U'q');
  EXPECT_EQ(Value::text(U"hi").as_text(), U"hi");
  EXPECT_THROW(Value::integer(1).as_char(), ContractViolation);
  EXPECT_THROW(Value::unit().tag(), ContractViolation);
  const auto p = Value::pair(Value::integer(1), Value::boolean(true));
  EXPECT_EQ(p.first(), Value::integer(1));
  EXPECT_EQ(p.second(), Value::boolean(true));
}

TEST(Value, ListsShareStructure) {
  const auto tail = Value::list({Value::integer(2), Value::integer(3)});
  const auto l = Value::cons(Value::integer(1), tail);
  EXPECT_EQ(l, Value::list({Value::integer(1), Value::integer(2), Value::integer(3)}));
  EXPECT_EQ(l.as_list().size(), 3u);
  EXPECT_EQ(tail.as_list().size(), 2u);
}

TEST(Value, EqualityIsStructural) {
  EXPECT_EQ(Value::adt("Var", {Value::text(U"x")}), Value::adt("Var", {Value::text(U"x")}));
  EXPECT_NE(Value::adt("Var", {Value::text(U"x")}), Value::adt("Var", {Value::text(U"y")}));
  EXPECT_NE(Value::adt("Var", {}), Value::adt("Abs", {}));
  EXPECT_NE(Value::integer(1), Value::boolean(true));
  EXPECT_NE(Value::list({Value::integer(1)}), Value::list(ValueList{}));
}

TEST(Value, DebugRendering) {
  const auto t = Value::adt(
      "Abs", {Value::text(U"x"), Value::adt("App", {Value::adt("Var", {Value::text(U"x")}),
                                                     Value::adt("Var", {Value::text(U"x")})})});
  EXPECT_EQ(t.debug(), "Abs \"x\" (App (Var \"x\") (Var \"x\"))");
  EXPECT_EQ(tuple({Value::integer(5), Value::character(U'a'), Value::character(U'f')}).debug(), "(5, 'a', 'f')");
  EXPECT_EQ(Value::list({Value::integer(-1)}).debug(), "[-1]");
  EXPECT_EQ(Value::adt("Just", {Value::integer(-1)}).debug(), "Just (-1)");
}

TEST(Value, DebugIsInjectiveOnSamples) {
  gen::Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    const auto a = gen::random_value(rng, 3);
    const auto b = gen::random_value(rng, 3);
    EXPECT_EQ(a == b, a.debug() == b.debug()) << a.debug() << " vs " << b.debug();
  }
}

TEST(Value, LongListsDestroyWithoutRecursion) {
  auto l = Value::list(ValueList{});
  for (int i = 0; i < 200000; ++i) l = Value::cons(Value::integer(i), l);
  EXPECT_EQ(l.as_list().size(), 200000u);
}

TEST(Json, EncodesTheDocumentedShapes) {
  EXPECT_EQ(encode_json(Value::unit()), "null");
  EXPECT_EQ(encode_json(Value::character(U'λ')), "{\"char\":\"λ\"}");
  EXPECT_EQ(encode_json(Value::pair(Value::integer(1), Value::boolean(false))), "{\"pair\":[1,false]}");
  EXPECT_EQ(encode_json(Value::adt("Var", {Value::text(U"x")})), "{\"Var\":\"x\"}");
  EXPECT_EQ(encode_json(Value::adt("Nil", {})), "{\"Nil\":[]}");
  EXPECT_EQ(encode_json(Value::adt("Wrap", {Value::list({Value::integer(1)})})), "{\"Wrap\":[[1]]}");
  EXPECT_EQ(encode_json(Value::adt("App", {Value::integer(1), Value::integer(2)})), "{\"App\":[1,2]}");
  EXPECT_THROW(encode_json(Value::adt("char", {Value::integer(1)})), ContractViolation);
}

TEST(Json, DecodeRejectsNonImages) {
  EXPECT_FALSE(decode_json("{\"Wrap\":[1]}"));
  EXPECT_FALSE(decode_json("{\"char\":\"ab\"}"));
  EXPECT_FALSE(decode_json("{\"pair\":[1]}"));
  EXPECT_FALSE(decode_json("{\"A\":1,\"B\":2}"));
  EXPECT_FALSE(decode_json("1.5"));
  EXPECT_FALSE(decode_json("not json"));
  EXPECT_FALSE(decode_json("18446744073709551615"));
}

TEST(Json, RoundTripsRandomValues) {
  gen::Rng rng(5);
  for (int i = 0; i < 3000; ++i) {
    const auto v = gen::random_value(rng, 4);
    const auto back = decode_json(encode_json(v));
    ASSERT_TRUE(back) << v.debug();
    EXPECT_EQ(*back, v) << v.debug();
  }
}
