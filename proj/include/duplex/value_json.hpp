#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "duplex/value.hpp"

namespace duplex {

// JSON encoding of values:
//
//   Unit            null
//   Bool            true / false
//   Int             number
//   Char c          {"char": "c"}
//   Text            "string"
//   List            [x, ...]
//   Pair(x, y)      {"pair": [x, y]}
//   Adt tag [x]     {"tag": x}          one argument that is not a List
//   Adt tag args    {"tag": [args...]}  any other arity, or a List argument
//
// The tags "char" and "pair" are reserved; encoding an Adt that uses them is a
// contract violation. Text is emitted as raw UTF-8 and the output is compact
// (no whitespace), so the encoding of a value is a fixed byte string.
nlohmann::json to_json(const Value& v);

// std::nullopt on any shape that is not the image of to_json.
std::optional<Value> from_json(const nlohmann::json& j);

std::string encode_json(const Value& v);
std::optional<Value> decode_json(std::string_view s);

}  // namespace duplex
