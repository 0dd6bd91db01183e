#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "djring/errors.hpp"
#include "djring/optics.hpp"
#include "djring/tree_core.hpp"

namespace djring::optics {
namespace {

OpticsParams params_with(double d) {
  OpticsParams p;
  p.spacing = d;
  p.window = 32.0 * d;
  return p;
}

double brute_min_distance(const std::vector<Vec2>& pts) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      best = std::min(best, std::hypot(pts[i].x - pts[j].x, pts[i].y - pts[j].y));
    }
  }
  return best;
}

TEST(DoveRotation, FirstRounds) {
  const auto k1 = dove_rotation_angle(1);
  EXPECT_NEAR(k1.phi, 0.46365, 1e-5);
  EXPECT_NEAR(k1.prism_setting, 0.23182, 1e-5);
  EXPECT_NEAR(std::tan(k1.phi), 0.5, 1e-15);
  EXPECT_NEAR(dove_rotation_angle(2).phi, 0.24498, 1e-5);
}

TEST(DoveRotation, DecreasesMonotonicallyTowardZero) {
  double previous = dove_rotation_angle(1).phi;
  for (int k = 2; k <= 60; ++k) {
    const double phi = dove_rotation_angle(k).phi;
    EXPECT_LT(phi, previous);
    EXPECT_GT(phi, 0.0);
    previous = phi;
  }
  EXPECT_LT(previous, 1e-17);
}

TEST(DoveRotation, RejectsRoundZero) {
  EXPECT_THROW(dove_rotation_angle(0), DomainError);
  EXPECT_THROW(dove_rotation_angle(-3), DomainError);
}

TEST(Lattice, InitialPairSitsOnHorizontalAxis) {
  const auto lat = initial_lattice(params_with(2.0));
  EXPECT_EQ(lat.round, 1);
  ASSERT_EQ(lat.count(), 2U);
  EXPECT_EQ(lat.positions[0], (Vec2{-1.0, 0.0}));
  EXPECT_EQ(lat.positions[1], (Vec2{1.0, 0.0}));
  EXPECT_DOUBLE_EQ(lattice_extent(lat), 4.0);
}

TEST(Lattice, FirstRoundTripDoublesSpotsAndHalvesSpacing) {
  const auto p = params_with(1.0);
  const auto lat = round_trip_lattice(initial_lattice(p), p);
  EXPECT_EQ(lat.round, 2);
  EXPECT_EQ(lat.count(), 4U);
  EXPECT_NEAR(lat.spacing, 0.5, 1e-15);
  EXPECT_NEAR(min_pair_distance(lat.positions), 0.5, 1e-12);
  EXPECT_NEAR(lattice_extent(lat), 2.0, 1e-9);
}

TEST(Lattice, ExtentStaysTwoDAndSpacingHalves) {
  for (double d : {0.3, 1.0, 7.5}) {
    const auto p = params_with(d);
    auto lat = initial_lattice(p);
    for (int k = 1; k <= 10; ++k) {
      if (k > 1) lat = round_trip_lattice(lat, p);
      EXPECT_EQ(lat.count(), std::size_t{1} << k);
      const double nominal = d / std::ldexp(1.0, k - 1);
      EXPECT_NEAR(lat.spacing, nominal, 1e-15 * d);
      EXPECT_NEAR(min_pair_distance(lat.positions), nominal, 1e-9 * nominal);
      EXPECT_NEAR(lattice_extent(lat), 2.0 * d, 1e-9 * d);
    }
  }
}

TEST(Lattice, LabelsFollowTreeDigits) {
  // Last digit picks the slit (x = -d/2 or +d/2); the first k-1 digits, read as
  // a binary number P, place the stripe at y = d P / 2^(k-1) - (d/2)(1 - 2^-(k-1)).
  const double d = 1.0;
  const auto p = params_with(d);
  auto lat = initial_lattice(p);
  for (int k = 1; k <= 6; ++k) {
    if (k > 1) lat = round_trip_lattice(lat, p);
    const double scale = std::ldexp(1.0, -(k - 1));
    for (tree::Label x = 0; x < lat.count(); ++x) {
      const double expected_x = (x & 1U) ? d / 2 : -d / 2;
      const double prefix = static_cast<double>(x >> 1);
      const double expected_y = d * prefix * scale - d / 2 * (1.0 - scale);
      EXPECT_EQ(lat.positions[x].x, expected_x) << "round " << k << " label " << x;
      EXPECT_NEAR(lat.positions[x].y, expected_y, 1e-14) << "round " << k << " label " << x;
    }
  }
}

TEST(Lattice, ChildrenShareTheirParentsStripe) {
  // Tree convention: parent p has children 2p and 2p+1.
  const auto p = params_with(1.0);
  auto lat = initial_lattice(p);
  for (int k = 1; k <= 6; ++k) {
    const auto next = round_trip_lattice(lat, p);
    for (tree::Label parent = 0; parent < lat.count(); ++parent) {
      EXPECT_EQ(next.positions[2 * parent].y, next.positions[2 * parent + 1].y);
      EXPECT_LT(next.positions[2 * parent].x, next.positions[2 * parent + 1].x);
    }
    lat = next;
  }
}

TEST(Lattice, FlagsSpacingBelowPitch) {
  OpticsParams p;
  p.spacing = 1.0;
  p.window = 16.0;
  p.grid_size = 64;  // pitch 0.25
  auto lat = initial_lattice(p);
  for (int k = 2; k <= 4; ++k) {
    lat = round_trip_lattice(lat, p);
    EXPECT_EQ(lat.under_resolved, lat.spacing < 0.25) << k;
  }
  EXPECT_TRUE(lat.under_resolved);
}

TEST(Lattice, RoundTripNeedsAStartedPattern) {
  EXPECT_THROW(round_trip_lattice(single_spot_lattice(), OpticsParams{}), ContractViolation);
  EXPECT_THROW(build_lattice(0, OpticsParams{}), ContractViolation);
}

TEST(Params, Validation) {
  OpticsParams p;
  EXPECT_NO_THROW(p.validate());
  p.grid_size = 100;
  EXPECT_THROW(p.validate(), ContractViolation);
  p = OpticsParams{};
  p.window = 3.0;
  EXPECT_THROW(p.validate(), ContractViolation);
  p = OpticsParams{};
  p.loss = 0.0;
  EXPECT_THROW(p.validate(), ContractViolation);
  p = OpticsParams{};
  p.spot_radius = -1.0;
  EXPECT_THROW(p.validate(), ContractViolation);
}

TEST(ResolvableRounds, Examples) {
  EXPECT_EQ(resolvable_rounds(8.0, 1.0), 4);
  EXPECT_EQ(resolvable_rounds(1.0, 1.0), 1);
  EXPECT_EQ(resolvable_rounds(1000.0, 1.0), 10);
  EXPECT_EQ(resolvable_rounds(0.5, 1.0), 0);
  EXPECT_THROW(resolvable_rounds(0.0, 1.0), DomainError);
  EXPECT_THROW(resolvable_rounds(1.0, -1.0), DomainError);
}

TEST(ResolvableRounds, ExactAtScaledPowersOfTwo) {
  for (double delta : {0.1, 0.3, 0.7, 1.9, 3e-4}) {
    for (int m = 0; m <= 12; ++m) {
      EXPECT_EQ(resolvable_rounds(delta * std::ldexp(1.0, m), delta), m + 1) << delta << " " << m;
    }
  }
}

TEST(MinPairDistance, MatchesBruteForce) {
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Vec2> pts(2 + rng() % 200);
    for (auto& q : pts) q = {u(rng), u(rng)};
    if (trial % 5 == 0) pts.push_back(pts.front());
    EXPECT_EQ(min_pair_distance(pts), brute_min_distance(pts));
  }
  EXPECT_TRUE(std::isinf(min_pair_distance(std::vector<Vec2>{{0.0, 0.0}})));
}

}  // namespace
}  // namespace djring::optics
