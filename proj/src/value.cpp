#include "duplex/value.hpp"

#include <cstdio>

#include "duplex/error.hpp"

namespace duplex {

namespace {

[[noreturn]] void wrong_kind(Value::Kind want, const Value& got) {
  throw ContractViolation(std::string("expected ") + kind_name(want) + ", got " + got.debug());
}

bool identifier_like(const std::string& tag) {
  if (tag.empty() || tag == "True" || tag == "False") return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  if (!alpha(tag[0])) return false;
  for (char c : tag) {
    if (!alpha(c) && !(c >= '0' && c <= '9') && c != '\'') return false;
  }
  return true;
}

// "(,,)" style tags, returning the tuple width or 0.
std::size_t tuple_width(const std::string& tag) {
  if (tag.size() < 4 || tag.front() != '(' || tag.back() != ')') return 0;
  for (std::size_t i = 1; i + 1 < tag.size(); ++i) {
    if (tag[i] != ',') return 0;
  }
  return tag.size() - 1;
}

void escape_into(std::string& out, char32_t c, char32_t quote) {
  if (c == quote || c == U'\\') {
    out.push_back('\\');
    out.push_back(static_cast<char>(c));
  } else if (c == U'\n') {
    out += "\\n";
  } else if (c < 0x20 || c == 0x7F) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "\\u{%X}", static_cast<unsigned>(c));
    out += buf;
  } else {
    out += text::to_utf8(c);
  }
}

void render(std::string& out, const Value& v, bool atom);

void render_args(std::string& out, const std::vector<Value>& args) {
  for (const auto& a : args) {
    out.push_back(' ');
    render(out, a, true);
  }
}

void render(std::string& out, const Value& v, bool atom) {
  switch (v.kind()) {
    case Value::Kind::unit:
      out += "()";
      return;
    case Value::Kind::boolean:
      out += v.as_bool() ? "True" : "False";
      return;
    case Value::Kind::integer:
      if (atom && v.as_int() < 0) {
        out += "(" + std::to_string(v.as_int()) + ")";
      } else {
        out += std::to_string(v.as_int());
      }
      return;
    case Value::Kind::character:
      out.push_back('\'');
      escape_into(out, v.as_char(), U'\'');
      out.push_back('\'');
      return;
    case Value::Kind::text:
      out.push_back('"');
      for (char32_t c : v.as_text()) escape_into(out, c, U'"');
      out.push_back('"');
      return;
    case Value::Kind::list: {
      out.push_back('[');
      bool first = true;
      for (const auto& item : v.as_list()) {
        if (!first) out += ", ";
        first = false;
        render(out, item, false);
      }
      out.push_back(']');
      return;
    }
    case Value::Kind::pair:
      out.push_back('(');
      render(out, v.first(), false);
      out += ", ";
      render(out, v.second(), false);
      out.push_back(')');
      return;
    case Value::Kind::adt: {
      const auto& tag = v.tag();
      const auto& args = v.args();
      const auto width = tuple_width(tag);
      if (width >= 3 && width == args.size()) {
        out.push_back('(');
        for (std::size_t i = 0; i < args.size(); ++i) {
          if (i) out += ", ";
          render(out, args[i], false);
        }
        out.push_back(')');
        return;
      }
      const bool wrap = atom && !args.empty();
      if (wrap) out.push_back('(');
      if (identifier_like(tag)) {
        out += tag;
      } else {
        out.push_back('`');
        for (char c : tag) {
          if (c == '`' || c == '\\') out.push_back('\\');
          out.push_back(c);
        }
        out.push_back('`');
      }
      render_args(out, args);
      if (wrap) out.push_back(')');
      return;
    }
  }
}

}  // namespace

const char* kind_name(Value::Kind k) {
  switch (k) {
    case Value::Kind::unit: return "Unit";
    case Value::Kind::boolean: return "Bool";
    case Value::Kind::integer: return "Int";
    case Value::Kind::character: return "Char";
    case Value::Kind::text: return "Text";
    case Value::Kind::list: return "List";
    case Value::Kind::pair: return "Pair";
    case Value::Kind::adt: return "Adt";
  }
  return "?";
}

Value Value::text(Text t) { return Value(Rep(std::make_shared<const Text>(std::move(t)))); }

Value Value::text_utf8(std::string_view utf8) { return text(text::from_utf8(utf8)); }

Value Value::list(std::span<const Value> items) {
  ValueList l;
  for (auto it = items.rbegin(); it != items.rend(); ++it) l = l.push(*it);
  return list(std::move(l));
}

Value Value::list(std::initializer_list<Value> items) {
  return list(std::span<const Value>(items.begin(), items.size()));
}

Value Value::pair(Value first, Value second) {
  return Value(Rep(std::make_shared<const PairRep>(PairRep{std::move(first), std::move(second)})));
}

Value Value::adt(std::string tag, std::vector<Value> args) {
  return Value(Rep(std::make_shared<const AdtRep>(AdtRep{std::move(tag), std::move(args)})));
}

Value Value::cons(Value head, const Value& tail) { return list(tail.as_list().push(std::move(head))); }

bool Value::as_bool() const {
  if (auto p = std::get_if<bool>(&rep_)) return *p;
  wrong_kind(Kind::boolean, *this);
}

std::int64_t Value::as_int() const {
  if (auto p = std::get_if<std::int64_t>(&rep_)) return *p;
  wrong_kind(Kind::integer, *this);
}

char32_t Value::as_char() const {
  if (auto p = std::get_if<char32_t>(&rep_)) return *p;
  wrong_kind(Kind::character, *this);
}

const Text& Value::as_text() const {
  if (auto p = std::get_if<std::shared_ptr<const Text>>(&rep_)) return **p;
  wrong_kind(Kind::text, *this);
}

const ValueList& Value::as_list() const {
  if (auto p = std::get_if<ValueList>(&rep_)) return *p;
  wrong_kind(Kind::list, *this);
}

std::vector<Value> Value::list_items() const {
  const auto& l = as_list();
  return std::vector<Value>(l.begin(), l.end());
}

const Value& Value::first() const {
  if (auto p = std::get_if<std::shared_ptr<const PairRep>>(&rep_)) return (*p)->first;
  wrong_kind(Kind::pair, *this);
}

const Value& Value::second() const {
  if (auto p = std::get_if<std::shared_ptr<const PairRep>>(&rep_)) return (*p)->second;
  wrong_kind(Kind::pair, *this);
}

const std::string& Value::tag() const {
  if (auto p = std::get_if<std::shared_ptr<const AdtRep>>(&rep_)) return (*p)->tag;
  wrong_kind(Kind::adt, *this);
}

const std::vector<Value>& Value::args() const {
  if (auto p = std::get_if<std::shared_ptr<const AdtRep>>(&rep_)) return (*p)->args;
  wrong_kind(Kind::adt, *this);
}

bool Value::operator==(const Value& other) const {
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::unit: return true;
    case Kind::boolean: return as_bool() == other.as_bool();
    case Kind::integer: return as_int() == other.as_int();
    case Kind::character: return as_char() == other.as_char();
    case Kind::text: return as_text() == other.as_text();
    case Kind::list: {
      const auto& a = as_list();
      const auto& b = other.as_list();
      if (a.size() != b.size()) return false;
      auto i = a.begin();
      auto j = b.begin();
      for (; i != a.end(); ++i, ++j) {
        if (i == j) return true;  // shared suffix
        if (!(*i == *j)) return false;
      }
      return true;
    }
    case Kind::pair: return first() == other.first() && second() == other.second();
    case Kind::adt: return tag() == other.tag() && args() == other.args();
  }
  return false;
}

std::string Value::debug() const {
  std::string out;
  render(out, *this, false);
  return out;
}

Value tuple(std::vector<Value> items) {
  if (items.size() == 2) return Value::pair(std::move(items[0]), std::move(items[1]));
  if (items.size() < 2) throw ContractViolation("tuple needs at least two components");
  std::string tag = "(" + std::string(items.size() - 1, ',') + ")";
  return Value::adt(std::move(tag), std::move(items));
}

}  // namespace duplex
