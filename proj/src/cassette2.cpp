#include "duplex/cassette2.hpp"

#include <vector>

#include "duplex/error.hpp"
#include "duplex/persistent.hpp"

namespace duplex::cassette2 {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

// Node is not movable (Deferred holds a once_flag), so kinds are emplaced.
template <class K>
std::shared_ptr<Node> make_node(K kind) {
  auto node = std::make_shared<Node>();
  node->kind.template emplace<K>(std::move(kind));
  return node;
}

template <class K>
Descriptor make(K kind) {
  return Descriptor(make_node(std::move(kind)));
}

std::shared_ptr<const Reducer> iso_reducer(const Iso& iso) {
  return std::make_shared<const Reducer>(
      Reducer{iso.name, 1, [from = iso.from](std::vector<Value> xs) { return from(xs[0]); }});
}

enum class Direction { print, parse };

struct ChoicePoint {
  const Node* alternative;
  detail::Chain<const Node*> kont;
  std::size_t mark;  // input offset or output length
  Stack stack;
};

Outcome run(Direction dir, const Node& root, TextView input, Stack stack) {
  detail::Chain<const Node*> kont;
  std::vector<ChoicePoint> choices;
  Text out;
  std::size_t pos = 0;
  const Node* cur = &root;

  for (;;) {
    if (cur == nullptr) {
      if (kont.empty()) return Success{std::move(out), pos, std::move(stack)};
      cur = kont.top();
      kont = kont.pop();
      continue;
    }

    // nullptr with ok=true continues; ok=false backtracks.
    const Node* next = nullptr;
    bool ok = true;

    std::visit(
        overloaded{
            [&](const Identity&) {},
            [&](const Fail&) { ok = false; },
            [&](const Seq& s) {
              kont = kont.push(s.second.get());
              next = s.first.get();
            },
            [&](const Alt& a) {
              choices.push_back({a.second.get(), kont, dir == Direction::print ? out.size() : pos, stack});
              next = a.first.get();
            },
            [&](const Satisfy& s) {
              if (dir == Direction::print) {
                auto [v, rest] = stack.pop(s.name.c_str());
                if (!v.is(Value::Kind::character)) {
                  throw ContractViolation(s.name + ": expected a Char on the stack, got " + v.debug());
                }
                if (!s.pred(v.as_char())) {
                  ok = false;
                  return;
                }
                out.push_back(v.as_char());
                stack = std::move(rest);
              } else {
                if (pos >= input.size() || !s.pred(input[pos])) {
                  ok = false;
                  return;
                }
                stack = stack.deliver(Value::character(input[pos]));
                ++pos;
              }
            },
            [&](const Lit& l) {
              if (dir == Direction::print) {
                out += l.text;
              } else if (input.substr(pos).starts_with(l.text)) {
                pos += l.text.size();
              } else {
                ok = false;
              }
            },
            [&](const LitUnit& l) {
              if (dir == Direction::print) {
                auto [v, rest] = stack.pop("lit'");
                if (!v.is(Value::Kind::unit)) {
                  throw ContractViolation("lit': expected Unit on the stack, got " + v.debug());
                }
                out += l.text;
                stack = std::move(rest);
              } else if (input.substr(pos).starts_with(l.text)) {
                pos += l.text.size();
                stack = stack.deliver(Value::unit());
              } else {
                ok = false;
              }
            },
            [&](const Lead& l) {
              if (dir == Direction::print) {
                auto [v, rest] = stack.pop(l.prism.tag().c_str());
                auto parts = l.prism.preview(v);
                if (!parts) {
                  ok = false;
                  return;
                }
                for (auto it = parts->rbegin(); it != parts->rend(); ++it) rest = rest.push(std::move(*it));
                stack = std::move(rest);
              } else {
                stack = stack.open(l.prism.reducer());
              }
            },
            [&](const IsoLead& l) {
              if (dir == Direction::print) {
                auto [v, rest] = stack.pop(l.iso.name.c_str());
                stack = rest.push(l.iso.to(v));
              } else {
                stack = stack.open(l.reducer);
              }
            },
            [&](const PairLead& l) {
              if (dir == Direction::print) {
                auto [v, rest] = stack.pop("pairL");
                if (!v.is(Value::Kind::pair)) {
                  throw ContractViolation("pairL: expected a Pair on the stack, got " + v.debug());
                }
                stack = rest.push(v.second()).push(v.first());
              } else {
                stack = stack.open(l.reducer);
              }
            },
            [&](const Deferred& d) { next = &d.resolve(); },
            [&](const Knot& k) { next = k.body.get(); },
            [&](const BackEdge& b) { next = &b.resolve(); },
        },
        cur->kind);

    if (ok) {
      cur = next;
      continue;
    }
    if (choices.empty()) return std::nullopt;
    auto& cp = choices.back();
    cur = cp.alternative;
    kont = std::move(cp.kont);
    stack = std::move(cp.stack);
    if (dir == Direction::print) {
      out.resize(cp.mark);
    } else {
      pos = cp.mark;
    }
    choices.pop_back();
  }
}

Value single_result(const Stack& st) {
  if (st.size() != 1 || !st.top().is_value()) {
    throw ContractViolation("parse: descriptor must leave exactly one value, left " + st.debug());
  }
  return st.top().value();
}

}  // namespace

const Node& Deferred::resolve() const {
  std::call_once(once, [this] { target = make().ptr(); });
  return *target;
}

const Node& BackEdge::resolve() const {
  auto k = knot.lock();
  if (!k) throw ContractViolation("fix: recursive reference used after its descriptor was released");
  // The knot outlives the run: whoever runs the graph holds it.
  return *k;
}

Descriptor identity() { return make(Identity{}); }
Descriptor fail() { return make(Fail{}); }

Descriptor compose(const Descriptor& a, const Descriptor& b) { return make(Seq{a.ptr(), b.ptr()}); }
Descriptor choice(const Descriptor& a, const Descriptor& b) { return make(Alt{a.ptr(), b.ptr()}); }

Descriptor satisfy(std::function<bool(char32_t)> pred, std::string name) {
  return make(Satisfy{std::move(pred), std::move(name)});
}

Descriptor any_char() {
  return satisfy([](char32_t) { return true; }, "char");
}
Descriptor digit_char() { return satisfy(text::is_digit, "isDigit"); }
Descriptor letter() { return satisfy(text::is_ascii_letter, "letter"); }
Descriptor alpha_num() { return satisfy(text::is_ascii_alnum, "alphaNum"); }

Descriptor lit(TextView s) { return make(Lit{Text(s)}); }
Descriptor lit_unit(TextView s) { return make(LitUnit{Text(s)}); }

Descriptor prism_l(Prism p) { return make(Lead{std::move(p)}); }

Descriptor iso_l(Iso iso) {
  auto r = iso_reducer(iso);
  return make(IsoLead{std::move(iso), std::move(r)});
}

Descriptor pair_l() {
  static const auto reducer = std::make_shared<const Reducer>(
      Reducer{"pair", 2, [](std::vector<Value> xs) { return pair_join(std::move(xs[0]), std::move(xs[1])); }});
  return make(PairLead{reducer});
}

Descriptor cons_l() { return prism_l(cons_prism()); }
Descriptor nil_l() { return prism_l(nil_prism()); }

Descriptor defer(std::function<Descriptor()> make_fn) {
  auto node = std::make_shared<Node>();
  node->kind.emplace<Deferred>().make = std::move(make_fn);
  return Descriptor(std::move(node));
}

Descriptor fix(const std::function<Descriptor(const Descriptor& self)>& f) {
  auto knot = make_node(Knot{});
  Descriptor self = make(BackEdge{std::weak_ptr<const Node>(knot)});
  auto body = f(self);
  std::get<Knot>(knot->kind).body = body.ptr();
  return Descriptor(std::move(knot));
}

Descriptor many(const Descriptor& p) {
  return fix([p](const Descriptor& self) { return (cons_l() >> p >> self) | nil_l(); });
}

Descriptor some(const Descriptor& p) { return cons_l() >> p >> many(p); }

Descriptor optional(const Descriptor& p) { return p | identity(); }

Descriptor integer() { return iso_l(decimal_iso()) >> some(digit_char()); }

Descriptor boolean() {
  return (prism_l(constant_prism("True", Value::boolean(true))) >> lit_unit(U"T")) |
         (prism_l(constant_prism("False", Value::boolean(false))) >> lit_unit(U"F"));
}

Outcome run_print(const Descriptor& d, Stack stack) {
  return run(Direction::print, d.node(), {}, std::move(stack));
}

Outcome run_parse(const Descriptor& d, TextView input, Stack stack) {
  return run(Direction::parse, d.node(), input, std::move(stack));
}

std::optional<Text> pretty(const Descriptor& d, const Value& v) {
  auto r = run_print(d, Stack::of({v}));
  if (!r) return std::nullopt;
  return std::move(r->text);
}

std::optional<Value> parse(const Descriptor& d, TextView input) {
  auto r = parse_prefix(d, input);
  if (!r) return std::nullopt;
  return std::move(r->value);
}

std::optional<Parsed> parse_prefix(const Descriptor& d, TextView input) {
  auto r = run_parse(d, input);
  if (!r) return std::nullopt;
  return Parsed{single_result(r->stack), r->consumed};
}

}  // namespace duplex::cassette2
