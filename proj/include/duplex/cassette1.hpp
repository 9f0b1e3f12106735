#pragma once

// Tier 1: applicative cassettes.
//
// A descriptor is a pair of continuation transformers, one per track. The
// print track threads (output so far, stack of arguments still to print); the
// parse track threads (input cursor, stack of values parsed so far). Composing
// descriptors composes the transformers, so splicing is function composition
// and associative by construction.
//
// There is no failure continuation at this tier. Any mismatch is terminal and
// surfaces as a Violation outcome.

#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "duplex/optics.hpp"
#include "duplex/stack.hpp"
#include "duplex/text.hpp"

namespace duplex::cassette1 {

struct Done {
  Text text;                 // print track output
  std::size_t consumed = 0;  // parse track input consumed
  Stack stack;

  bool operator==(const Done&) const = default;
};

struct Violation {
  std::string diagnostic;

  bool operator==(const Violation&) const = default;
};

using Outcome = std::variant<Done, Violation>;

struct Cursor {
  TextView input;
  std::size_t pos = 0;

  TextView rest() const { return input.substr(pos); }
};

using PrintK = std::function<Outcome(Text& out, Stack)>;
using ParseK = std::function<Outcome(Cursor, Stack)>;
using PrintTr = std::function<PrintK(PrintK)>;
using ParseTr = std::function<ParseK(ParseK)>;

// Stack effect seen from the print track: how many values the descriptor
// consumes from the top and how many it leaves in their place. The parse track
// has the mirror effect.
struct StackEffect {
  std::size_t pops = 0;
  std::size_t pushes = 0;

  bool operator==(const StackEffect&) const = default;
};

class Descriptor {
 public:
  Descriptor(PrintTr print, ParseTr parse, StackEffect effect)
      : print_(std::move(print)), parse_(std::move(parse)), effect_(effect) {}

  const PrintTr& print_track() const noexcept { return print_; }
  const ParseTr& parse_track() const noexcept { return parse_; }
  StackEffect effect() const noexcept { return effect_; }

 private:
  PrintTr print_;
  ParseTr parse_;
  StackEffect effect_;
};

Descriptor identity();
Descriptor compose(const Descriptor& a, const Descriptor& b);
inline Descriptor operator>>(const Descriptor& a, const Descriptor& b) { return compose(a, b); }

// One character satisfying pred. `name` appears in diagnostics.
Descriptor satisfy(std::function<bool(char32_t)> pred, std::string name);

// Nullary: prints exactly s, parses exactly s.
Descriptor lit(TextView s);

// Maps the value at the top of the stack through iso.to when printing and
// iso.from when parsing.
Descriptor iso_l(Iso iso);

// Print: Pair(a, b) on top becomes a over b. Parse: the next two values
// delivered are joined into Pair(a, b).
Descriptor pair_l();

Descriptor any_char();
Descriptor digit();

// digit . lit "-th character after " . char . lit " is " . char
Descriptor example_format();

Outcome run_print(const Descriptor& d, std::span<const Value> args);
Outcome run_parse(const Descriptor& d, TextView input);

// Throws ContractViolation. Arguments are given in textual order; the first
// argument is the first one printed.
Text format(const Descriptor& d, std::span<const Value> args);

// Values come back in textual order. Trailing input is ignored.
std::vector<Value> scan(const Descriptor& d, TextView input);

}  // namespace duplex::cassette1
