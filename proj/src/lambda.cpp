#include "duplex/lambda.hpp"

#include "duplex/error.hpp"
#include "duplex/value_json.hpp"

namespace duplex::lambda {

namespace {

constexpr TextView kLambda = U"λ";

CassetteGrammar build_cassette() {
  using namespace cassette2;
  const auto parens = [](const Descriptor& p) { return lit(U"(") >> p >> lit(U")"); };
  const auto sep_space = lit(U" ");
  const auto idnt = iso_l(text_chars_iso()) >> cons_l() >> letter() >> many(alpha_num());

  std::optional<Descriptor> var_alt, abs_alt, app_alt;
  auto term = fix([&](const Descriptor& self) {
    var_alt = prism_l(adt_prism("Var", 1)) >> idnt;
    abs_alt = prism_l(adt_prism("Abs", 2)) >> lit(kLambda) >> idnt >> lit(U".") >> self;
    app_alt = prism_l(adt_prism("App", 2)) >> parens(self >> sep_space >> self);
    return *var_alt | *abs_alt | *app_alt;
  });
  return CassetteGrammar{term, *var_alt, *abs_alt, *app_alt};
}

stacked::choice::Action<Value> build_stacked() {
  using namespace stacked::choice;
  using stacked::Curried;
  const auto parens = [](const Action<Value>& p) { return lit(U"(").then(p).skip(lit(U")")); };
  const auto sep_space = lit(U" ");
  const auto idnt = iso(text_chars_iso(), cons_l().ap(letter()).ap(many(alpha_num())));
  const auto var_l = prism_l<1>(adt_prism("Var", 1));
  const auto abs_l = prism_l<2>(adt_prism("Abs", 2));
  const auto app_l = prism_l<2>(adt_prism("App", 2));

  return fix<Value>([=](const Action<Value>& term) {
    return var_l.ap(idnt) |
           abs_l.skip(lit(kLambda)).ap(idnt).skip(lit(U".")).ap(term) |
           parens(app_l.ap(term).skip(sep_space).ap(term));
  });
}

}  // namespace

Value var(Text name) { return Value::adt("Var", {Value::text(std::move(name))}); }
Value abs(Text binder, Value body) { return Value::adt("Abs", {Value::text(std::move(binder)), std::move(body)}); }
Value app(Value fun, Value arg) { return Value::adt("App", {std::move(fun), std::move(arg)}); }

bool is_identifier(TextView s) {
  if (s.empty() || !text::is_ascii_letter(s.front())) return false;
  for (char32_t c : s.substr(1)) {
    if (!text::is_ascii_alnum(c)) return false;
  }
  return true;
}

bool is_term(const Value& v) {
  // Iterative so that deep application spines cannot overflow.
  std::vector<const Value*> todo = {&v};
  while (!todo.empty()) {
    const Value& t = *todo.back();
    todo.pop_back();
    if (!t.is(Value::Kind::adt)) return false;
    const auto& args = t.args();
    const auto& tag = t.tag();
    if (tag == "Var" && args.size() == 1) {
      if (!args[0].is(Value::Kind::text) || !is_identifier(args[0].as_text())) return false;
    } else if (tag == "Abs" && args.size() == 2) {
      if (!args[0].is(Value::Kind::text) || !is_identifier(args[0].as_text())) return false;
      todo.push_back(&args[1]);
    } else if (tag == "App" && args.size() == 2) {
      todo.push_back(&args[0]);
      todo.push_back(&args[1]);
    } else {
      return false;
    }
  }
  return true;
}

const CassetteGrammar& cassette_grammar() {
  static const CassetteGrammar g = build_cassette();
  return g;
}

const cassette2::Descriptor& term_grammar_cassette() { return cassette_grammar().term; }

const stacked::choice::Action<Value>& term_grammar_stacked() {
  static const auto g = build_stacked();
  return g;
}

std::optional<Value> parse_cassette(TextView s) {
  auto r = cassette2::parse_prefix(term_grammar_cassette(), s);
  if (!r || r->consumed != s.size()) return std::nullopt;
  return std::move(r->value);
}

std::optional<Value> parse_stacked(TextView s) {
  auto r = stacked::choice::parse_prefix(term_grammar_stacked(), s);
  if (!r || r->second != s.size()) return std::nullopt;
  return std::move(r->first);
}

std::optional<Text> pretty_cassette(const Value& t) { return cassette2::pretty(term_grammar_cassette(), t); }
std::optional<Text> pretty_stacked(const Value& t) { return stacked::choice::pretty(term_grammar_stacked(), t); }

std::string term_to_json(const Value& t) {
  if (!is_term(t)) throw ContractViolation("term_to_json: not a term: " + t.debug());
  return encode_json(t);
}

std::optional<Value> term_from_json(std::string_view json) {
  auto v = decode_json(json);
  if (!v || !is_term(*v)) return std::nullopt;
  return v;
}

}  // namespace duplex::lambda
