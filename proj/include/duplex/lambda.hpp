#pragma once

// Untyped λ-calculus terms and their concrete syntax, built on both the
// cassette engine and the stacked engine:
//
//   term ::= idnt | "λ" idnt "." term | "(" term " " term ")"
//   idnt ::= letter alphaNum*        (ASCII)
//
// Terms are Adt values: Var(Text) | Abs(Text, term) | App(term, term).
// Alternatives are tried in the order Var, Abs, App.

#include <optional>
#include <string>
#include <string_view>

#include "duplex/cassette2.hpp"
#include "duplex/stacked/choice.hpp"
#include "duplex/value.hpp"

namespace duplex::lambda {

Value var(Text name);
Value abs(Text binder, Value body);
Value app(Value fun, Value arg);

bool is_identifier(TextView s);
// Shape and identifier invariants, checked all the way down.
bool is_term(const Value& v);

struct CassetteGrammar {
  cassette2::Descriptor term;
  // The three alternatives of `term`, each recursing into the full `term`.
  cassette2::Descriptor var, abs, app;
};

// Built once; safe to share across threads.
const CassetteGrammar& cassette_grammar();
const cassette2::Descriptor& term_grammar_cassette();

const stacked::choice::Action<Value>& term_grammar_stacked();

// Whole-input parsing: std::nullopt unless all of `s` is consumed.
std::optional<Value> parse_cassette(TextView s);
std::optional<Value> parse_stacked(TextView s);
std::optional<Text> pretty_cassette(const Value& t);
std::optional<Text> pretty_stacked(const Value& t);

// Throws ContractViolation if `t` is not a term.
std::string term_to_json(const Value& t);
// std::nullopt on malformed JSON or anything that is not a term.
std::optional<Value> term_from_json(std::string_view json);

}  // namespace duplex::lambda
