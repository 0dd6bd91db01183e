#include "djring/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "djring/errors.hpp"

namespace djring::oracle {

TruthTable::TruthTable(int n, std::vector<std::uint8_t> bits) : n_(n), bits_(std::move(bits)) {
  if (n_ < 1 || n_ >= 63) throw ContractViolation("truth table register size must be in [1, 62]");
  if (bits_.size() != (std::size_t{1} << n_)) {
    throw ContractViolation("truth table length must be 2^n");
  }
  for (auto b : bits_) {
    if (b > 1) throw ContractViolation("truth table entries must be 0 or 1");
  }
}

TruthTable TruthTable::from_string(std::string_view bits) {
  const std::size_t len = bits.size();
  if (len < 2 || (len & (len - 1)) != 0) {
    throw ContractViolation("truth table length must be a power of two >= 2");
  }
  std::vector<std::uint8_t> out;
  out.reserve(len);
  for (char c : bits) {
    if (c != '0' && c != '1') throw ContractViolation("truth table must contain only 0 and 1");
    out.push_back(static_cast<std::uint8_t>(c == '1'));
  }
  int n = 0;
  while ((std::size_t{1} << n) < len) ++n;
  return TruthTable(n, std::move(out));
}

TruthTable TruthTable::constant(int n, bool value) {
  if (n < 1 || n >= 63) throw ContractViolation("truth table register size must be in [1, 62]");
  return TruthTable(n, std::vector<std::uint8_t>(std::size_t{1} << n, value ? 1 : 0));
}

std::string TruthTable::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

const char* to_string(Tag tag) {
  switch (tag) {
    case Tag::Constant0: return "Constant0";
    case Tag::Constant1: return "Constant1";
    case Tag::Balanced: return "Balanced";
    case Tag::Biased: return "Biased";
  }
  return "?";
}

FunctionClass classify_table(const TruthTable& t) {
  const auto bits = t.bits();
  const std::uint64_t ones = static_cast<std::uint64_t>(std::count(bits.begin(), bits.end(), 1));
  const std::uint64_t zeros = t.size() - ones;
  Tag tag = Tag::Biased;
  if (ones == 0) {
    tag = Tag::Constant0;
  } else if (zeros == 0) {
    tag = Tag::Constant1;
  } else if (ones == zeros) {
    tag = Tag::Balanced;
  }
  return {tag, zeros, ones};
}

tree::GateProgram compile_general(const TruthTable& t) {
  const int n = t.n();
  tree::GateProgram program;
  program.n = n;
  program.global_phase = t[0];
  for (int k = 1; k <= n; ++k) {
    // A prefix p of length k-1 followed by branch b and zeros is the label
    // ((p << 1) | b) << (n - k).
    tree::PhaseMaskOp op;
    op.level = k;
    op.mask.resize(std::size_t{1} << (k - 1));
    for (std::size_t p = 0; p < op.mask.size(); ++p) {
      const std::size_t zero_branch = (p << 1) << (n - k);
      const std::size_t one_branch = ((p << 1) | 1U) << (n - k);
      op.mask[p] = static_cast<std::uint8_t>(t[one_branch] != t[zero_branch]);
    }
    program.add(k, std::move(op));
  }
  return program;
}

tree::GateProgram compile_affine(const AffineSpec& spec, int n) {
  if (n < 1) throw ContractViolation("register size must be >= 1");
  if (spec.a.size() != static_cast<std::size_t>(n)) {
    throw ContractViolation("affine coefficient count must equal n");
  }
  tree::GateProgram program;
  program.n = n;
  program.global_phase = spec.c;
  for (int k = 1; k <= n; ++k) {
    if (!spec.a[k - 1]) continue;
    program.add(k, tree::PhaseMaskOp{k, std::vector<std::uint8_t>(std::size_t{1} << (k - 1), 1)});
  }
  return program;
}

TruthTable affine_table(const AffineSpec& spec) {
  const int n = static_cast<int>(spec.a.size());
  if (n < 1) throw ContractViolation("affine spec needs at least one coefficient");
  std::size_t mask = 0;
  for (int k = 1; k <= n; ++k) {
    if (spec.a[k - 1]) mask |= std::size_t{1} << (n - k);
  }
  std::vector<std::uint8_t> bits(std::size_t{1} << n);
  for (std::size_t x = 0; x < bits.size(); ++x) {
    bits[x] = static_cast<std::uint8_t>((std::popcount(x & mask) & 1U) ^ (spec.c ? 1U : 0U));
  }
  return TruthTable(n, std::move(bits));
}

std::optional<AffineSpec> is_affine(const TruthTable& t) {
  const int n = t.n();
  AffineSpec candidate;
  candidate.c = t[0];
  candidate.a.resize(n);
  for (int k = 1; k <= n; ++k) {
    candidate.a[k - 1] = static_cast<std::uint8_t>(t[std::size_t{1} << (n - k)] != candidate.c);
  }
  if (affine_table(candidate) != t) return std::nullopt;
  return candidate;
}

TruthTable canonical_balanced_table(int n) {
  if (n < 1) throw ContractViolation("register size must be >= 1");
  AffineSpec spec{std::vector<std::uint8_t>(n, 0), false};
  spec.a[0] = 1;
  return affine_table(spec);
}

tree::GateProgram canonical_balanced_program(int n) {
  if (n < 1) throw ContractViolation("register size must be >= 1");
  tree::GateProgram program;
  program.n = n;
  program.add(1, tree::PhaseMaskOp{1, {1}});
  return program;
}

tree::Permutation relabel_to_canonical(const TruthTable& t) {
  if (classify_table(t).tag != Tag::Balanced) {
    throw DomainError("relabeling requires a balanced function");
  }
  // f*(y) = y1: zeros are the lower half of labels, ones the upper half.
  const std::size_t half = t.size() / 2;
  tree::Permutation sigma(t.size());
  std::size_t next_zero = 0;
  std::size_t next_one = half;
  for (std::size_t x = 0; x < t.size(); ++x) {
    if (t[x]) {
      sigma[next_one++] = x;
    } else {
      sigma[next_zero++] = x;
    }
  }
  return sigma;
}

TruthTable compose(const TruthTable& t, std::span<const tree::Label> sigma) {
  if (sigma.size() != t.size()) throw ContractViolation("permutation size must equal 2^n");
  std::vector<std::uint8_t> bits(t.size());
  for (std::size_t y = 0; y < bits.size(); ++y) {
    if (sigma[y] >= t.size()) throw ContractViolation("permutation entry out of range");
    bits[y] = t[sigma[y]] ? 1 : 0;
  }
  return TruthTable(t.n(), std::move(bits));
}

TruthTable table_from_leaves(const tree::PathState& state, bool global_phase) {
  if (state.level < 1) throw ContractViolation("state has no path qubits");
  std::vector<std::uint8_t> bits;
  bits.reserve(state.size());
  for (int s : tree::leaf_signs(state)) {
    if (s == 0) throw ContractViolation("leaf amplitude has no definite sign");
    bits.push_back(static_cast<std::uint8_t>((s < 0) != global_phase));
  }
  return TruthTable(state.level, std::move(bits));
}

TruthTable random_table(int n, std::mt19937_64& rng) {
  if (n < 1 || n >= 63) throw ContractViolation("truth table register size must be in [1, 62]");
  std::vector<std::uint8_t> bits(std::size_t{1} << n);
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1U);
  return TruthTable(n, std::move(bits));
}

TruthTable random_table_with_ones(int n, std::uint64_t ones, std::mt19937_64& rng) {
  if (n < 1 || n >= 63) throw ContractViolation("truth table register size must be in [1, 62]");
  const std::size_t size = std::size_t{1} << n;
  if (ones > size) throw ContractViolation("more ones requested than arguments");
  std::vector<std::uint8_t> bits(size, 0);
  std::fill_n(bits.begin(), ones, 1);
  std::shuffle(bits.begin(), bits.end(), rng);
  return TruthTable(n, std::move(bits));
}

TruthTable random_balanced(int n, std::mt19937_64& rng) {
  return random_table_with_ones(n, (std::uint64_t{1} << n) / 2, rng);
}

tree::Permutation random_permutation(std::size_t size, std::mt19937_64& rng) {
  tree::Permutation sigma(size);
  std::iota(sigma.begin(), sigma.end(), tree::Label{0});
  std::shuffle(sigma.begin(), sigma.end(), rng);
  return sigma;
}

}  // namespace djring::oracle
