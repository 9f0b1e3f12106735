#include "duplex/value_json.hpp"

#include "duplex/error.hpp"

namespace duplex {

using nlohmann::json;

json to_json(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::unit: return nullptr;
    case Value::Kind::boolean: return v.as_bool();
    case Value::Kind::integer: return v.as_int();
    case Value::Kind::character: return json{{"char", text::to_utf8(v.as_char())}};
    case Value::Kind::text: return text::to_utf8(v.as_text());
    case Value::Kind::list: {
      json arr = json::array();
      for (const auto& item : v.as_list()) arr.push_back(to_json(item));
      return arr;
    }
    case Value::Kind::pair: return json{{"pair", json::array({to_json(v.first()), to_json(v.second())})}};
    case Value::Kind::adt: {
      if (v.tag() == "char" || v.tag() == "pair") {
        throw ContractViolation("JSON: constructor tag '" + v.tag() + "' is reserved");
      }
      const auto& args = v.args();
      json body;
      if (args.size() == 1 && !args[0].is(Value::Kind::list)) {
        body = to_json(args[0]);
      } else {
        body = json::array();
        for (const auto& a : args) body.push_back(to_json(a));
      }
      json obj = json::object();
      obj[v.tag()] = std::move(body);
      return obj;
    }
  }
  return nullptr;
}

std::optional<Value> from_json(const json& j) {
  switch (j.type()) {
    case json::value_t::null: return Value::unit();
    case json::value_t::boolean: return Value::boolean(j.get<bool>());
    case json::value_t::number_integer: return Value::integer(j.get<std::int64_t>());
    case json::value_t::number_unsigned: {
      const auto u = j.get<std::uint64_t>();
      if (u > static_cast<std::uint64_t>(INT64_MAX)) return std::nullopt;
      return Value::integer(static_cast<std::int64_t>(u));
    }
    case json::value_t::string: {
      try {
        return Value::text_utf8(j.get<std::string>());
      } catch (const ContractViolation&) {
        return std::nullopt;
      }
    }
    case json::value_t::array: {
      std::vector<Value> items;
      for (const auto& e : j) {
        auto v = from_json(e);
        if (!v) return std::nullopt;
        items.push_back(std::move(*v));
      }
      return Value::list(items);
    }
    case json::value_t::object: {
      if (j.size() != 1) return std::nullopt;
      const auto& [key, body] = *j.items().begin();
      if (key == "char") {
        if (!body.is_string()) return std::nullopt;
        Text t;
        try {
          t = text::from_utf8(body.get<std::string>());
        } catch (const ContractViolation&) {
          return std::nullopt;
        }
        if (t.size() != 1) return std::nullopt;
        return Value::character(t[0]);
      }
      if (key == "pair") {
        if (!body.is_array() || body.size() != 2) return std::nullopt;
        auto a = from_json(body[0]);
        auto b = from_json(body[1]);
        if (!a || !b) return std::nullopt;
        return Value::pair(std::move(*a), std::move(*b));
      }
      std::vector<Value> args;
      if (body.is_array()) {
        for (const auto& e : body) {
          auto v = from_json(e);
          if (!v) return std::nullopt;
          args.push_back(std::move(*v));
        }
        // A single List argument is always written wrapped, never bare.
        if (args.size() == 1 && !args[0].is(Value::Kind::list)) return std::nullopt;
      } else {
        auto v = from_json(body);
        if (!v) return std::nullopt;
        args.push_back(std::move(*v));
      }
      return Value::adt(key, std::move(args));
    }
    default: return std::nullopt;
  }
}

std::string encode_json(const Value& v) { return to_json(v).dump(); }

std::optional<Value> decode_json(std::string_view s) {
  auto j = json::parse(s, nullptr, false);
  if (j.is_discarded()) return std::nullopt;
  return from_json(j);
}

}  // namespace duplex
