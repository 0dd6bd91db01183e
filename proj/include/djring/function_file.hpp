#pragma once

// Function files are ASCII `key = value` lines:
//
//   n = <int>
//   type = truthtable | affine | constant
//   bits = <2^n chars of 0/1, ascending argument order>   (truthtable)
//   a = <n bits, a1 first>                                 (affine)
//   c = <bit>                                              (affine)
//   value = <bit>                                          (constant)
//
// Blank lines and lines starting with '#' are ignored.

#include <optional>
#include <string>
#include <string_view>

#include "djring/oracle.hpp"

namespace djring::oracle {

enum class FunctionKind { TruthTable, Affine, Constant };

struct FunctionSpec {
  int n = 0;
  FunctionKind kind = FunctionKind::TruthTable;
  std::optional<TruthTable> table;  // set for TruthTable
  AffineSpec affine;                // set for Affine and Constant (a = 0...0, c = value)

  // Materializes the truth table (2^n entries).
  TruthTable to_table() const;

  // compile_general for tables, compile_affine otherwise.
  tree::GateProgram compile() const;
};

// Throws ParseError with a line number for malformed input and ResourceError
// when n exceeds max_n.
FunctionSpec parse_function(std::string_view text, int max_n = tree::kDefaultMaxLevel);

FunctionSpec load_function_file(const std::string& path, int max_n = tree::kDefaultMaxLevel);

std::string function_to_text(const FunctionSpec& spec);

}  // namespace djring::oracle
