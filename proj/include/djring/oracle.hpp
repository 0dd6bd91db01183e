#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "djring/tree_core.hpp"

namespace djring::oracle {

// Boolean function f on {0, ..., 2^n - 1}; bits()[x] == f(x). Argument digits
// follow the tree convention (x1 is the most significant bit).
class TruthTable {
 public:
  // Throws ContractViolation unless n >= 1 and bits.size() == 2^n with 0/1 entries.
  TruthTable(int n, std::vector<std::uint8_t> bits);

  // Parses a string of '0'/'1' whose length must be a power of two >= 2.
  static TruthTable from_string(std::string_view bits);
  static TruthTable constant(int n, bool value);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return bits_.size(); }
  bool operator[](std::size_t x) const noexcept { return bits_[x] != 0; }
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }
  std::string to_string() const;

  bool operator==(const TruthTable&) const = default;

 private:
  int n_;
  std::vector<std::uint8_t> bits_;
};

enum class Tag { Constant0, Constant1, Balanced, Biased };

const char* to_string(Tag tag);

struct FunctionClass {
  Tag tag;
  std::uint64_t zeros;
  std::uint64_t ones;

  bool is_constant() const noexcept { return tag == Tag::Constant0 || tag == Tag::Constant1; }
  bool operator==(const FunctionClass&) const = default;
};

// f(x) = c XOR (a1 x1 XOR ... XOR an xn)
struct AffineSpec {
  std::vector<std::uint8_t> a;
  bool c = false;

  bool operator==(const AffineSpec&) const = default;
};

FunctionClass classify_table(const TruthTable& t);

// Per level k, mask[p] = t[p.1.0..0] XOR t[p.0.0..0]; global phase = t[0].
// Every level gets a mask, including all-zero ones.
tree::GateProgram compile_general(const TruthTable& t);

// Uniform level-k masks equal to a_k; zero levels are omitted.
tree::GateProgram compile_affine(const AffineSpec& spec, int n);

std::optional<AffineSpec> is_affine(const TruthTable& t);

TruthTable affine_table(const AffineSpec& spec);

// The canonical balanced function f*(y) = y1.
TruthTable canonical_balanced_table(int n);

tree::GateProgram canonical_balanced_program(int n);

// sigma with t[sigma[y]] == f*(y), matching f*'s zeros onto t's zeros (and
// ones onto ones) in ascending order. Throws DomainError unless t is balanced.
tree::Permutation relabel_to_canonical(const TruthTable& t);

// (t o sigma)[y] = t[sigma[y]].
TruthTable compose(const TruthTable& t, std::span<const tree::Label> sigma);

// Table whose ones are exactly the negative leaves of `state`, XOR global.
// Throws ContractViolation if a leaf has no definite sign.
TruthTable table_from_leaves(const tree::PathState& state, bool global_phase);

TruthTable random_table(int n, std::mt19937_64& rng);
TruthTable random_table_with_ones(int n, std::uint64_t ones, std::mt19937_64& rng);
TruthTable random_balanced(int n, std::mt19937_64& rng);
tree::Permutation random_permutation(std::size_t size, std::mt19937_64& rng);

}  // namespace djring::oracle
