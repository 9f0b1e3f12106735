#include <gtest/gtest.h>

#include "duplex/error.hpp"
#include "duplex/lambda.hpp"
#include "support/gen.hpp"

using namespace duplex;
using namespace duplex::lambda;

namespace {

const Value kSelfApply = abs(U"x", app(var(U"x"), var(U"x")));

std::optional<Value> parse2(TextView s) { return cassette2::parse(term_grammar_cassette(), s); }
std::optional<Value> parse3(TextView s) { return stacked::choice::parse(term_grammar_stacked(), s); }
std::optional<Text> pretty2(const Value& t) { return cassette2::pretty(term_grammar_cassette(), t); }
std::optional<Text> pretty3(const Value& t) { return stacked::choice::pretty(term_grammar_stacked(), t); }

}  // namespace

TEST(Lambda, SelfApplicationBothEngines) {
  EXPECT_EQ(parse2(U"λx.(x x)"), kSelfApply);
  EXPECT_EQ(parse3(U"λx.(x x)"), kSelfApply);
  EXPECT_EQ(pretty2(kSelfApply), U"λx.(x x)");
  EXPECT_EQ(pretty3(kSelfApply), U"λx.(x x)");
  EXPECT_EQ(kSelfApply.debug(), "Abs \"x\" (App (Var \"x\") (Var \"x\"))");
}

TEST(Lambda, Variables) {
  EXPECT_EQ(parse2(U"x"), var(U"x"));
  EXPECT_EQ(parse3(U"x"), var(U"x"));
  EXPECT_EQ(parse2(U"ab12"), var(U"ab12"));
  EXPECT_FALSE(parse2(U"1a"));
  EXPECT_FALSE(parse3(U"1a"));
}

TEST(Lambda, IdentifiersAreMaximalMunch) {
  auto p = cassette2::parse_prefix(term_grammar_cassette(), U"ab cd");
  ASSERT_TRUE(p);
  EXPECT_EQ(p->value, var(U"ab"));
  EXPECT_EQ(p->consumed, 2u);
  auto q = stacked::choice::parse_prefix(term_grammar_stacked(), U"ab cd");
  ASSERT_TRUE(q);
  EXPECT_EQ(q->first, var(U"ab"));
  EXPECT_EQ(q->second, 2u);
}

TEST(Lambda, RejectsMalformedText) {
  for (std::u32string_view s : {U"(x", U"((", U"", U"λ.x", U"λx x", U"(x  y)", U"( x y)", U"\\x.x", U"(x y", U"λ"}) {
    EXPECT_FALSE(parse2(s)) << text::to_utf8(s);
    EXPECT_FALSE(parse3(s)) << text::to_utf8(s);
  }
}

TEST(Lambda, NoWhitespaceBesidesTheApplicationSpace) {
  EXPECT_FALSE(parse2(U"λx. (x x)"));
  EXPECT_FALSE(parse3(U"λx. (x x)"));
  EXPECT_FALSE(parse2(U"λx.(x\tx)"));
}

TEST(Lambda, PrettyRejectsNonTerms) {
  EXPECT_FALSE(pretty2(var(U"")));
  EXPECT_FALSE(pretty3(var(U"")));
  EXPECT_FALSE(pretty2(var(U"a_b")));
  EXPECT_FALSE(pretty2(Value::adt("Let", {})));
  EXPECT_FALSE(pretty3(Value::adt("Let", {})));
}

TEST(Lambda, TermPredicate) {
  EXPECT_TRUE(is_term(kSelfApply));
  EXPECT_FALSE(is_term(var(U"")));
  EXPECT_FALSE(is_term(var(U"9")));
  EXPECT_FALSE(is_term(Value::adt("Var", {Value::integer(1)})));
  EXPECT_FALSE(is_term(Value::adt("App", {var(U"x")})));
  EXPECT_TRUE(is_identifier(U"a1"));
  EXPECT_FALSE(is_identifier(U"λ"));
}

TEST(Lambda, Json) {
  EXPECT_EQ(term_to_json(var(U"x")), "{\"Var\":\"x\"}");
  EXPECT_EQ(term_to_json(kSelfApply), "{\"Abs\":[\"x\",{\"App\":[{\"Var\":\"x\"},{\"Var\":\"x\"}]}]}");
  EXPECT_EQ(term_from_json("{\"Var\":\"x\"}"), var(U"x"));
  EXPECT_FALSE(term_from_json("{}"));
  EXPECT_FALSE(term_from_json("{\"Var\":\"\"}"));
  EXPECT_FALSE(term_from_json("[1"));
  EXPECT_THROW(term_to_json(Value::integer(1)), ContractViolation);
}

TEST(Lambda, JsonRoundTripOnGeneratedTerms) {
  gen::Rng rng(17);
  for (int i = 0; i < 500; ++i) {
    const auto t = gen::random_term(rng, 6);
    EXPECT_EQ(term_from_json(term_to_json(t)), t);
  }
}

TEST(Lambda, RoundTripOnGeneratedTerms) {
  gen::Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    const auto t = gen::random_term(rng, 6);
    const auto s2 = pretty2(t);
    const auto s3 = pretty3(t);
    ASSERT_TRUE(s2) << t.debug();
    EXPECT_EQ(s2, s3);
    EXPECT_EQ(parse2(*s2), t);
    EXPECT_EQ(parse3(*s2), t);
  }
}

TEST(Lambda, AlternativesAreExclusive) {
  const auto& g = cassette_grammar();
  for (std::u32string_view s : {U"x", U"λy.y", U"(f a)"}) {
    int matches = 0;
    for (const auto* alt : {&g.var, &g.abs, &g.app}) {
      auto r = cassette2::parse_prefix(*alt, s);
      if (r && r->consumed == s.size()) ++matches;
    }
    EXPECT_EQ(matches, 1) << text::to_utf8(s);
  }
}
