#include "djring/tree_core.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "djring/errors.hpp"

namespace djring::tree {

namespace {

constexpr std::size_t kPairwiseBlock = 16;

bool prefix_matches(Label prefix, const std::vector<PatternBit>& pattern) {
  const std::size_t width = pattern.size();
  for (std::size_t i = 0; i < width; ++i) {
    const bool bit = (prefix >> (width - 1 - i)) & 1U;
    switch (pattern[i]) {
      case PatternBit::Zero:
        if (bit) return false;
        break;
      case PatternBit::One:
        if (!bit) return false;
        break;
      case PatternBit::Any:
        break;
    }
  }
  return true;
}

}  // namespace

double PathState::power() const {
  double total = 0.0;
  for (const auto& a : amplitudes) total += std::norm(a);
  return total;
}

int op_level(const GateOp& op) {
  return std::visit([](const auto& o) { return o.level; }, op);
}

void GateProgram::add(int round, GateOp op) {
  if (!steps.empty() && round < steps.back().round) {
    throw ContractViolation("gate program rounds must not decrease (round " +
                            std::to_string(round) + " after " +
                            std::to_string(steps.back().round) + ")");
  }
  if (steps.empty() || steps.back().round != round) steps.push_back({round, {}});
  steps.back().ops.push_back(std::move(op));
}

void GateProgram::validate() const {
  if (n < 1) throw ContractViolation("gate program register size must be >= 1");
  int previous = 0;
  for (const auto& step : steps) {
    if (step.round <= previous || step.round > n) {
      throw ContractViolation("gate program rounds must be strictly increasing and within [1, n]");
    }
    if (step.ops.empty()) throw ContractViolation("gate program step without ops");
    previous = step.round;
    for (const auto& op : step.ops) {
      if (const auto* mask = std::get_if<PhaseMaskOp>(&op)) {
        if (mask->level != step.round) {
          throw ContractViolation("phase mask of level " + std::to_string(mask->level) +
                                  " must be applied at round " + std::to_string(mask->level));
        }
        if (mask->mask.size() != (std::size_t{1} << (mask->level - 1))) {
          throw ContractViolation("phase mask length must be 2^(level-1)");
        }
      } else {
        const auto& swap = std::get<SwapOp>(op);
        if (swap.level < 1 || swap.level > step.round) {
          throw ContractViolation("swap level must lie in [1, round]");
        }
        if (swap.pattern.size() != static_cast<std::size_t>(swap.level - 1)) {
          throw ContractViolation("swap pattern length must be level-1");
        }
      }
    }
  }
}

PathState init_state() { return PathState{}; }

PathState split_step(const PathState& state, int max_level) {
  if (state.level + 1 > max_level) {
    throw ResourceError("split would exceed the maximum tree level " + std::to_string(max_level));
  }
  PathState out;
  out.level = state.level + 1;
  out.amplitudes.resize(state.amplitudes.size() * 2);
  for (std::size_t p = 0; p < state.amplitudes.size(); ++p) {
    const Amplitude child = state.amplitudes[p] * M_SQRT1_2;
    out.amplitudes[2 * p] = child;
    out.amplitudes[2 * p + 1] = child;
  }
  return out;
}

PathState apply_phase_mask(const PathState& state, const PhaseMaskOp& op) {
  if (op.level != state.level) {
    throw ContractViolation("phase mask level " + std::to_string(op.level) +
                            " does not match state level " + std::to_string(state.level));
  }
  if (op.mask.size() * 2 != state.amplitudes.size()) {
    throw ContractViolation("phase mask length must be 2^(level-1)");
  }
  PathState out = state;
  for (std::size_t p = 0; p < op.mask.size(); ++p) {
    if (op.mask[p]) out.amplitudes[2 * p + 1] = -out.amplitudes[2 * p + 1];
  }
  return out;
}

PathState apply_swap(const PathState& state, const SwapOp& op) {
  if (op.level < 1 || op.level > state.level) {
    throw ContractViolation("swap level " + std::to_string(op.level) + " outside [1, " +
                            std::to_string(state.level) + "]");
  }
  if (op.pattern.size() != static_cast<std::size_t>(op.level - 1)) {
    throw ContractViolation("swap pattern length must be level-1");
  }
  PathState out = state;
  const int suffix_bits = state.level - op.level;
  const Label suffix_count = Label{1} << suffix_bits;
  const Label prefix_count = Label{1} << (op.level - 1);
  for (Label prefix = 0; prefix < prefix_count; ++prefix) {
    if (!prefix_matches(prefix, op.pattern)) continue;
    const Label base = prefix << (suffix_bits + 1);
    for (Label s = 0; s < suffix_count; ++s) {
      std::swap(out.amplitudes[base | s], out.amplitudes[base | suffix_count | s]);
    }
  }
  return out;
}

PathState apply_op(const PathState& state, const GateOp& op) {
  if (const auto* mask = std::get_if<PhaseMaskOp>(&op)) return apply_phase_mask(state, *mask);
  return apply_swap(state, std::get<SwapOp>(op));
}

PathState run_program(const GateProgram& program, int max_level) {
  program.validate();
  if (program.n > max_level) {
    throw ResourceError("register size " + std::to_string(program.n) +
                        " exceeds the maximum tree level " + std::to_string(max_level));
  }
  PathState state = init_state();
  auto step = program.steps.begin();
  for (int round = 1; round <= program.n; ++round) {
    state = split_step(state, max_level);
    if (step != program.steps.end() && step->round == round) {
      for (const auto& op : step->ops) state = apply_op(state, op);
      ++step;
    }
  }
  return state;
}

Amplitude pairwise_sum(std::span<const Amplitude> values) {
  if (values.size() <= kPairwiseBlock) {
    Amplitude total{0.0, 0.0};
    for (const auto& v : values) total += v;
    return total;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

double inverse_sqrt_pow2(int level) {
  if (level % 2 == 0) return std::ldexp(1.0, -level / 2);
  return std::ldexp(M_SQRT1_2, -(level - 1) / 2);
}

Amplitude readout_amplitude(const PathState& state) {
  return pairwise_sum(state.amplitudes) * inverse_sqrt_pow2(state.level);
}

PathState permute_leaves(const PathState& state, std::span<const Label> sigma) {
  const std::size_t count = state.amplitudes.size();
  if (sigma.size() != count) {
    throw ContractViolation("permutation size does not match the number of leaves");
  }
  std::vector<bool> hit(count, false);
  PathState out;
  out.level = state.level;
  out.amplitudes.assign(count, Amplitude{});
  for (std::size_t x = 0; x < count; ++x) {
    const Label target = sigma[x];
    if (target >= count || hit[target]) throw ContractViolation("label map is not a bijection");
    hit[target] = true;
    out.amplitudes[target] = state.amplitudes[x];
  }
  return out;
}

std::vector<int> leaf_signs(const PathState& state) {
  std::vector<int> signs;
  signs.reserve(state.amplitudes.size());
  for (const auto& a : state.amplitudes) signs.push_back(a.real() > 0.0 ? 1 : (a.real() < 0.0 ? -1 : 0));
  return signs;
}

}  // namespace djring::tree
