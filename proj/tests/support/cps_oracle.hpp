#pragma once

// Reference interpreter for tier-2 descriptor graphs, written directly in
// continuation-passing style: a success continuation that receives the
// failure continuation to install, and failure continuations that unroll the
// stack effect of every step they undo. Choice restores only the text
// position; everything else must be restored by the unrolls.
//
// Recursive and slow. Used only to cross-check the engine on small inputs.

#include <optional>

#include "duplex/cassette2.hpp"

namespace duplex::oracle {

struct Result {
  Text text;
  std::size_t consumed = 0;
  std::vector<Value> stack;  // top last; only complete values
};

std::optional<Result> print(const cassette2::Descriptor& d, std::vector<Value> stack_top_last);
std::optional<Result> parse(const cassette2::Descriptor& d, TextView input);

}  // namespace duplex::oracle
