#pragma once

// Command-line front end.
//
//   duplex parse       [--engine E] [--grammar lambda] [--input FILE]
//   duplex pretty      [--engine E] [--grammar lambda] [--input FILE]
//   duplex roundtrip   [--engine E] [--grammar lambda] [--input FILE]
//   duplex fmt print   [--tier 1|3] INT CHAR CHAR
//   duplex fmt scan    [--tier 1|3] [TEXT] [--input FILE]
//   duplex test-corpus [--engine E] DIR
//
// E is cassette (default) or stacked. Without --input, text is read from
// standard input; one trailing newline is dropped.
//
// Exit status: 0 success, 1 syntax failure or unprintable value, 2 usage,
// I/O or contract violation.

#include <iosfwd>
#include <string>
#include <vector>

namespace duplex::cli {

enum Exit : int { kOk = 0, kSyntax = 1, kEnvironment = 2 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace duplex::cli
