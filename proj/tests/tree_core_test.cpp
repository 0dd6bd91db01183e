#include "djring/tree_core.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "djring/errors.hpp"
#include "djring/oracle.hpp"
#include "test_support.hpp"

namespace djring::tree {
namespace {

constexpr double kHalf = 0.5;
const double kRootHalf = 1.0 / std::sqrt(2.0);

PathState make_state(int level, std::vector<Amplitude> amps) { return PathState{level, std::move(amps)}; }

void expect_amplitudes(const PathState& s, const std::vector<double>& expected, double tol) {
  ASSERT_EQ(s.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_NEAR(s.amplitudes[i].real(), expected[i], tol) << "label " << i;
    EXPECT_EQ(s.amplitudes[i].imag(), 0.0) << "label " << i;
  }
}

TEST(InitState, IsUnitRoot) {
  const auto s = init_state();
  EXPECT_EQ(s.level, 0);
  expect_amplitudes(s, {1.0}, 0.0);
}

TEST(SplitStep, FirstSplitGivesEqualSuperposition) {
  const auto s = split_step(init_state());
  EXPECT_EQ(s.level, 1);
  expect_amplitudes(s, {kRootHalf, kRootHalf}, 1e-15);
}

TEST(SplitStep, TwoSplitsGiveFourHalves) {
  expect_amplitudes(split_step(split_step(init_state())), {kHalf, kHalf, kHalf, kHalf}, 1e-15);
}

TEST(SplitStep, IsLinearOnSignedInput) {
  const auto s = split_step(make_state(1, {kRootHalf, -kRootHalf}));
  expect_amplitudes(s, {kHalf, kHalf, -kHalf, -kHalf}, 1e-15);
}

TEST(SplitStep, NSplitsGiveUniformAmplitudes) {
  PathState s = init_state();
  for (int n = 1; n <= 16; ++n) {
    s = split_step(s);
    const double expected = std::pow(2.0, -n / 2.0);
    for (const auto& a : s.amplitudes) EXPECT_NEAR(a.real(), expected, 1e-15 * expected);
    EXPECT_NEAR(s.power(), 1.0, 1e-12);
  }
}

TEST(SplitStep, RefusesToExceedMaximumLevel) {
  PathState s = init_state();
  for (int i = 0; i < 3; ++i) s = split_step(s, 3);
  EXPECT_THROW(split_step(s, 3), ResourceError);
}

TEST(PhaseMask, SinglePlateFlipsBranchOne) {
  const auto s = apply_phase_mask(split_step(init_state()), PhaseMaskOp{1, {1}});
  expect_amplitudes(s, {kRootHalf, -kRootHalf}, 1e-15);
}

TEST(PhaseMask, AllZeroMaskIsIdentity) {
  const auto s = split_step(split_step(init_state()));
  EXPECT_EQ(apply_phase_mask(s, PhaseMaskOp{2, {0, 0}}).amplitudes, s.amplitudes);
}

TEST(PhaseMask, LevelTwoMaskHitsChildOfPrefixOne) {
  const auto s = make_state(2, {kHalf, kHalf, kHalf, kHalf});
  expect_amplitudes(apply_phase_mask(s, PhaseMaskOp{2, {0, 1}}), {kHalf, kHalf, kHalf, -kHalf}, 0.0);
}

TEST(PhaseMask, RejectsLevelMismatch) {
  const auto s = split_step(split_step(init_state()));
  EXPECT_THROW(apply_phase_mask(s, PhaseMaskOp{1, {1}}), ContractViolation);
  EXPECT_THROW(apply_phase_mask(s, PhaseMaskOp{2, {1}}), ContractViolation);
}

TEST(Swap, ToffoliAtLevelThreeExchanges110And111) {
  PathState s{3, {}};
  for (int i = 0; i < 8; ++i) s.amplitudes.emplace_back(i, 0.0);
  const auto out = apply_swap(s, SwapOp{3, {PatternBit::One, PatternBit::One}});
  expect_amplitudes(out, {0, 1, 2, 3, 4, 5, 7, 6}, 0.0);
}

TEST(Swap, WildcardLevelOneIsNot) {
  const auto out = apply_swap(make_state(1, {{2.0, 0.0}, {3.0, 0.0}}), SwapOp{1, {}});
  expect_amplitudes(out, {3.0, 2.0}, 0.0);
}

TEST(Swap, ActsOnEarlierLevelAndCarriesSuffix) {
  // Level-1 NOT on a level-2 state exchanges the halves 0x <-> 1x.
  const auto out = apply_swap(make_state(2, {{0, 0}, {1, 0}, {2, 0}, {3, 0}}), SwapOp{1, {}});
  expect_amplitudes(out, {2, 3, 0, 1}, 0.0);
  // Controlled on x1 = 0 at level 2: 00 <-> 01 only.
  const auto cnot = apply_swap(make_state(2, {{0, 0}, {1, 0}, {2, 0}, {3, 0}}),
                               SwapOp{2, {PatternBit::Zero}});
  expect_amplitudes(cnot, {1, 0, 2, 3}, 0.0);
}

TEST(Swap, RejectsBadPatternOrLevel) {
  const auto s = split_step(split_step(init_state()));
  EXPECT_THROW(apply_swap(s, SwapOp{2, {}}), ContractViolation);
  EXPECT_THROW(apply_swap(s, SwapOp{3, {PatternBit::Any, PatternBit::Any}}), ContractViolation);
}

TEST(RunProgram, EmptyProgramPreparesUniformState) {
  GateProgram p;
  p.n = 2;
  expect_amplitudes(run_program(p), {kHalf, kHalf, kHalf, kHalf}, 1e-15);
}

TEST(RunProgram, SinglePhasePlate) {
  GateProgram p;
  p.n = 1;
  p.add(1, PhaseMaskOp{1, {1}});
  expect_amplitudes(run_program(p), {kRootHalf, -kRootHalf}, 1e-15);
}

TEST(RunProgram, CompiledXorTable) {
  const auto s = run_program(oracle::compile_general(oracle::TruthTable::from_string("0110")));
  expect_amplitudes(s, {kHalf, -kHalf, -kHalf, kHalf}, 1e-15);
}

TEST(RunProgram, RejectsInvalidPrograms) {
  GateProgram late_mask;
  late_mask.n = 3;
  late_mask.steps.push_back({3, {PhaseMaskOp{2, {1, 0}}}});
  EXPECT_THROW(run_program(late_mask), ContractViolation);

  GateProgram out_of_range;
  out_of_range.n = 2;
  out_of_range.steps.push_back({3, {SwapOp{1, {}}}});
  EXPECT_THROW(run_program(out_of_range), ContractViolation);

  GateProgram unordered;
  unordered.n = 3;
  unordered.steps.push_back({2, {SwapOp{1, {}}}});
  unordered.steps.push_back({2, {SwapOp{1, {}}}});
  EXPECT_THROW(run_program(unordered), ContractViolation);

  GateProgram p;
  p.n = 3;
  p.add(2, SwapOp{1, {}});
  EXPECT_THROW(p.add(1, SwapOp{1, {}}), ContractViolation);
}

TEST(Readout, ConstantFunctionGivesUnitAmplitude) {
  for (int n = 1; n <= 12; ++n) {
    GateProgram p;
    p.n = n;
    EXPECT_NEAR(std::abs(readout_amplitude(run_program(p)) - 1.0), 0.0, 1e-12) << n;
  }
}

TEST(Readout, BalancedSingleQubitVanishes) {
  EXPECT_EQ(readout_amplitude(make_state(1, {kRootHalf, -kRootHalf})), Amplitude(0.0, 0.0));
}

TEST(Readout, BiasedTableGivesHalf) {
  // Brute force: (1/2^n) sum_x (-1)^t[x] for t = 0001 is (3 - 1) / 4.
  const double expected = (3.0 - 1.0) / 4.0;
  const auto t = oracle::TruthTable::from_string("0001");
  const auto r = readout_amplitude(run_program(oracle::compile_general(t)));
  EXPECT_NEAR(r.real(), expected, 1e-15);
  EXPECT_NEAR(std::norm(r), 0.25, 1e-15);
}

TEST(Permute, IdentityLeavesStateUnchanged) {
  const auto s = make_state(2, {kHalf, kHalf, kHalf, -kHalf});
  const Permutation id{0, 1, 2, 3};
  EXPECT_EQ(permute_leaves(s, id).amplitudes, s.amplitudes);
}

TEST(Permute, SwapOfZeroAndThree) {
  const auto s = make_state(2, {kHalf, kHalf, kHalf, -kHalf});
  const Permutation sigma{3, 1, 2, 0};
  expect_amplitudes(permute_leaves(s, sigma), {-kHalf, kHalf, kHalf, kHalf}, 0.0);
}

TEST(Permute, RejectsNonBijections) {
  const auto s = make_state(2, {kHalf, kHalf, kHalf, kHalf});
  const Permutation dup{0, 0, 1, 2};
  const Permutation range{0, 1, 2, 4};
  const Permutation short_map{0, 1, 2};
  EXPECT_THROW(permute_leaves(s, dup), ContractViolation);
  EXPECT_THROW(permute_leaves(s, range), ContractViolation);
  EXPECT_THROW(permute_leaves(s, short_map), ContractViolation);
}

TEST(Permute, ReadoutIsInvariant) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto t = oracle::random_table(n, rng);
    const auto s = run_program(oracle::compile_general(t));
    const auto sigma = oracle::random_permutation(s.size(), rng);
    EXPECT_LT(std::abs(readout_amplitude(permute_leaves(s, sigma)) - readout_amplitude(s)), 1e-15);
  }
}

TEST(Properties, PowerIsConservedAfterEveryStep) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const auto program = testing::random_program(n, rng);
    PathState s = init_state();
    auto step = program.steps.begin();
    for (int round = 1; round <= n; ++round) {
      s = split_step(s);
      ASSERT_NEAR(s.power(), 1.0, 1e-12);
      if (step != program.steps.end() && step->round == round) {
        for (const auto& op : step->ops) {
          s = apply_op(s, op);
          ASSERT_NEAR(s.power(), 1.0, 1e-12);
        }
        ++step;
      }
    }
  }
}

TEST(Properties, EveryOpIsAnInvolution) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int level = 1 + static_cast<int>(rng() % 8);
    const auto s = testing::random_state(level, rng);
    PhaseMaskOp mask{level, std::vector<std::uint8_t>(std::size_t{1} << (level - 1))};
    for (auto& b : mask.mask) b = rng() & 1U;
    EXPECT_EQ(apply_phase_mask(apply_phase_mask(s, mask), mask).amplitudes, s.amplitudes);

    SwapOp swap;
    swap.level = 1 + static_cast<int>(rng() % level);
    for (int i = 0; i + 1 < swap.level; ++i) {
      swap.pattern.push_back(static_cast<PatternBit>("01*"[rng() % 3]));
    }
    EXPECT_EQ(apply_swap(apply_swap(s, swap), swap).amplitudes, s.amplitudes);
  }
}

TEST(Properties, ReadoutMatchesCountClosedForm) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto t = oracle::random_table(n, rng);
    const auto program = oracle::compile_general(t);
    const auto s = run_program(program);
    // Count leaves by sign relative to the tracked global phase.
    double plus = 0;
    double minus = 0;
    for (int sign : leaf_signs(s)) (sign > 0 ? plus : minus) += 1;
    const double closed = (plus - minus) / static_cast<double>(s.size());
    EXPECT_NEAR(readout_amplitude(s).real(), closed, 1e-12);
    EXPECT_NEAR(readout_amplitude(s).imag(), 0.0, 1e-12);
  }
}

TEST(PairwiseSum, IsDeterministicAndAccurate) {
  std::vector<Amplitude> values(1000, Amplitude(0.1, -0.2));
  const auto a = pairwise_sum(values);
  EXPECT_EQ(a, pairwise_sum(values));
  EXPECT_NEAR(a.real(), 100.0, 1e-12);
  EXPECT_NEAR(a.imag(), -200.0, 1e-12);
}

TEST(InverseSqrtPow2, MatchesPow) {
  for (int k = 0; k <= 30; ++k) EXPECT_NEAR(inverse_sqrt_pow2(k), std::pow(2.0, -k / 2.0), 1e-15);
}

}  // namespace
}  // namespace djring::tree
