#pragma once

// Brute-force language enumeration for small context-free grammars, used as
// an independent oracle for backtracking parsers.

#include <map>
#include <set>
#include <string>
#include <vector>

namespace duplex::cfg {

// A symbol is a terminal character or the name of a nonterminal.
struct Symbol {
  bool terminal;
  char ch;           // when terminal
  std::string name;  // otherwise
};

inline Symbol t(char c) { return {true, c, {}}; }
inline Symbol n(std::string name) { return {false, 0, std::move(name)}; }

using Production = std::vector<Symbol>;

struct Grammar {
  std::string start;
  std::map<std::string, std::vector<Production>> rules;
};

// Every string of length <= max_len derivable from the start symbol. Computed
// as the least fixpoint of the productions over length-bounded string sets.
std::set<std::string> enumerate(const Grammar& g, std::size_t max_len);

}  // namespace duplex::cfg
