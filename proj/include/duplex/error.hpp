#pragma once

#include <stdexcept>
#include <string>

namespace duplex {

// Terminal misuse of a descriptor: stack underflow, a value of the wrong
// kind where a primitive expected another, or a partial primitive applied
// outside its domain. Distinct from the recoverable failure that drives
// choice.
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace duplex
