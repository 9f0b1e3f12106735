#pragma once

// Deterministic generators for property tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "duplex/value.hpp"

namespace duplex::gen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }
  bool coin() { return range(0, 1) == 1; }
  template <class T>
  const T& pick(const std::vector<T>& xs) {
    return xs[static_cast<std::size_t>(range(0, static_cast<std::int64_t>(xs.size()) - 1))];
  }

 private:
  std::mt19937_64 engine_;
};

// Random value of bounded depth over every kind.
Value random_value(Rng& rng, int depth);

// Identifier drawn from [a-z][a-z0-9]{0,3}.
std::string random_identifier(Rng& rng);

// Random lambda term of depth at most `depth` (Var is depth 1).
Value random_term(Rng& rng, int depth);

// Every value up to the given depth over a small alphabet: Unit, both Bools,
// a few Ints and Chars, short Texts, Lists, Pairs and Adts with tags from
// `tags` (each used at arities 0..2).
std::vector<Value> enumerate_values(int depth, const std::vector<std::string>& tags);

}  // namespace duplex::gen
