#pragma once

// Property suites shared by the unit tests and the acceptance runner. Every
// suite reports how many generated cases it ran and how many held; laws are
// checked observationally, by running both sides on the same probes.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "duplex/text.hpp"

namespace duplex::props {

struct Check {
  std::string name;
  std::size_t cases = 0;
  std::size_t passed = 0;
  std::string first_failure;

  bool ok() const { return cases > 0 && passed == cases; }
  void record(bool holds, const std::function<std::string()>& why);
  std::string summary() const;
};

inline constexpr std::size_t kLawCases = 200;
inline constexpr std::size_t kProbes = 20;

// Composition is associative with identity as unit.
Check tier1_category_laws(std::uint64_t seed, std::size_t cases = kLawCases);
Check tier2_category_laws(std::uint64_t seed, std::size_t cases = kLawCases);
// Choice is associative with fail as unit.
Check tier2_choice_laws(std::uint64_t seed, std::size_t cases = kLawCases);
Check tier3_choice_laws(std::uint64_t seed, std::size_t cases = kLawCases);
// return/bind unit and associativity.
Check tier3_linear_monad_laws(std::uint64_t seed, std::size_t cases = kLawCases);
Check tier3_choice_monad_laws(std::uint64_t seed, std::size_t cases = kLawCases);

// Interleaving stack operations into a program leaves every parse result
// unchanged, on both stacked variants.
Check stack_transparency(std::uint64_t seed, std::size_t cases);
// A linear printer that leaves the stack shape as it found it emits exactly
// its text and result, whatever lies below.
Check output_pair_law(std::uint64_t seed, std::size_t cases);

// Junk below the working region changes neither the result nor itself.
Check frame_rule_tier2(std::uint64_t seed, std::size_t pairs);
Check frame_rule_tier3(std::uint64_t seed, std::size_t pairs);

// preview . review and review . preview, exhaustively over enumerated values.
Check prism_laws();

// Tier-2 parse success and consumed length against a CFG enumerator, for every
// input over {a, b} up to max_len.
Check backtracking_oracle(std::size_t max_len);

// parse (pretty t) == t on generated terms, one case per term and engine.
Check round_trip(std::uint64_t seed, std::size_t terms, int depth);

struct CorpusCase {
  std::string name;
  Text source;
  std::optional<std::string> json;  // std::nullopt when the text must be rejected
  std::optional<Text> canon;
};

std::vector<CorpusCase> load_corpus(const std::filesystem::path& dir);

// Recorded ASTs and canonical text, both engines.
Check corpus_expectations(const std::vector<CorpusCase>& corpus);
// parse s = t implies pretty t = s' and parse s' = t, both engines.
Check corpus_coherence(const std::vector<CorpusCase>& corpus);
// Tier-2 and tier-3 grammars give identical optional results.
Check cross_engine(const std::vector<CorpusCase>& corpus);
// On every subterm of every accepted case exactly one alternative of the
// tier-2 grammar consumes it completely.
Check unambiguous(const std::vector<CorpusCase>& corpus);

// The tier-2 integer descriptor against a decimal digit fold.
Check int2_digit_fold(std::uint64_t seed, std::size_t cases);

}  // namespace duplex::props
