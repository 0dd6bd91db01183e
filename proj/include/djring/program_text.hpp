#pragma once

// Line-oriented ASCII encoding of a GateProgram:
//
//   N <n>
//   PHASE level=<k> mask=<2^(k-1) bits>
//   SWAP level=<k> pattern=<k-1 chars over 0,1,*>
//   GLOBAL <0|1>
//
// Ops apply in file order. A PHASE line runs at round k. A SWAP line runs at
// round max(k, round of the previous op), so it follows any deeper PHASE that
// precedes it. Blank lines and lines starting with '#' are ignored.

#include <string>
#include <string_view>

#include "djring/tree_core.hpp"

namespace djring::tree {

// Throws ParseError with the offending line number.
GateProgram parse_program(std::string_view text);

// Throws ContractViolation if the program is invalid or uses a round placement
// the format cannot express (a SWAP deferred past its own level without a
// deeper PHASE ahead of it in the same step).
std::string program_to_text(const GateProgram& program);

}  // namespace djring::tree
