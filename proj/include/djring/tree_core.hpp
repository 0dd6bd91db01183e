#pragma once

// Binary decision-tree amplitude engine.
//
// A path label x at level L carries the digits x1..xL of the branches taken
// at each split; x1 (the first split) is the MOST significant bit. This
// convention is used by every module and by all file formats.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace djring::tree {

using Amplitude = std::complex<double>;
using Label = std::size_t;
using Permutation = std::vector<Label>;

inline constexpr int kDefaultMaxLevel = 30;

struct PathState {
  int level = 0;
  std::vector<Amplitude> amplitudes{Amplitude{1.0, 0.0}};

  std::size_t size() const noexcept { return amplitudes.size(); }
  double power() const;
};

// Flips the sign of child p.1 for every parent prefix p with mask[p] == 1.
struct PhaseMaskOp {
  int level = 1;
  std::vector<std::uint8_t> mask;  // length 2^(level-1), indexed by parent prefix

  bool operator==(const PhaseMaskOp&) const = default;
};

enum class PatternBit : char { Zero = '0', One = '1', Any = '*' };

// Exchanges the two children at `level` of every parent prefix matching
// `pattern`. An all-wildcard pattern is a NOT on qubit `level`; fixed bits act
// as controls (pattern "11" at level 3 is a Toffoli).
struct SwapOp {
  int level = 1;
  std::vector<PatternBit> pattern;  // length level-1, matched against x1..x(level-1)

  bool operator==(const SwapOp&) const = default;
};

using GateOp = std::variant<PhaseMaskOp, SwapOp>;

int op_level(const GateOp& op);

// Ops applied right after split number `round`.
struct ProgramStep {
  int round = 1;
  std::vector<GateOp> ops;

  bool operator==(const ProgramStep&) const = default;
};

struct GateProgram {
  int n = 0;
  std::vector<ProgramStep> steps;
  // Overall -1 implied by the encoded function. Never applied to amplitudes.
  bool global_phase = false;

  // Appends `op` to the step for `round`, opening a new step when `round` is
  // later than the last one. Rounds must not decrease.
  void add(int round, GateOp op);

  // Throws ContractViolation unless: 1 <= n; steps have strictly increasing
  // rounds in [1, n] and are non-empty; phase masks sit at round == level with
  // a mask of length 2^(level-1); swaps satisfy level <= round with a pattern
  // of length level-1.
  void validate() const;

  bool operator==(const GateProgram&) const = default;
};

PathState init_state();

// Throws ResourceError if the new level would exceed max_level.
PathState split_step(const PathState& state, int max_level = kDefaultMaxLevel);

// Requires op.level == state.level.
PathState apply_phase_mask(const PathState& state, const PhaseMaskOp& op);

// Requires op.level <= state.level and pattern length op.level - 1.
PathState apply_swap(const PathState& state, const SwapOp& op);

PathState apply_op(const PathState& state, const GateOp& op);

PathState run_program(const GateProgram& program, int max_level = kDefaultMaxLevel);

// (1 / sqrt(2^level)) * sum_x amplitudes[x], summed pairwise in a fixed order.
Amplitude readout_amplitude(const PathState& state);

// Moves amplitudes[x] to position sigma[x]. Throws ContractViolation if sigma
// is not a bijection on the labels of `state`.
PathState permute_leaves(const PathState& state, std::span<const Label> sigma);

// +1 / -1 per leaf from the sign of the real part; 0 for a vanishing amplitude.
std::vector<int> leaf_signs(const PathState& state);

// Fixed-shape pairwise sum; the result depends only on the input order.
Amplitude pairwise_sum(std::span<const Amplitude> values);

// 2^(-level/2) computed without accumulating per-split rounding.
double inverse_sqrt_pow2(int level);

}  // namespace djring::tree
