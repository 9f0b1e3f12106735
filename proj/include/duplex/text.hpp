#pragma once

#include <string>
#include <string_view>

namespace duplex {

// Text is a sequence of Unicode scalar values.
using Text = std::u32string;
using TextView = std::u32string_view;

namespace text {

// Throws ContractViolation on malformed UTF-8.
Text from_utf8(std::string_view bytes);
std::string to_utf8(TextView text);
std::string to_utf8(char32_t c);

inline Text from_ascii(std::string_view s) { return Text(s.begin(), s.end()); }

bool is_digit(char32_t c);
bool is_ascii_letter(char32_t c);
bool is_ascii_alnum(char32_t c);

}  // namespace text
}  // namespace duplex
