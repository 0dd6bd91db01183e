#include "djring/optics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>
#include <utility>

#include "djring/errors.hpp"

namespace djring::optics {

void OpticsParams::validate() const {
  if (!(spacing > 0.0) || !std::isfinite(spacing)) {
    throw ContractViolation("spot spacing must be positive");
  }
  if (!(spot_radius > 0.0) || !std::isfinite(spot_radius)) {
    throw ContractViolation("spot radius must be positive");
  }
  if (grid_size < 64 || (grid_size & (grid_size - 1)) != 0) {
    throw ContractViolation("grid size must be a power of two >= 64");
  }
  if (!(window >= 4.0 * spacing) || !std::isfinite(window)) {
    throw ContractViolation("window must be at least 4 * spacing");
  }
  if (!(loss > 0.0 && loss <= 1.0)) throw ContractViolation("loss must lie in (0, 1]");
}

RotationAngles dove_rotation_angle(int k) {
  if (k < 1) throw DomainError("rotation angle is defined for rounds k >= 1");
  const double phi = std::atan(std::ldexp(1.0, -k));
  return {phi, phi / 2.0};
}

SpotLattice single_spot_lattice() { return SpotLattice{0, {Vec2{0.0, 0.0}}, 0.0, false}; }

SpotLattice initial_lattice(const OpticsParams& params) {
  params.validate();
  const double half = params.spacing / 2.0;
  SpotLattice lat{1, {Vec2{-half, 0.0}, Vec2{half, 0.0}}, params.spacing, false};
  lat.under_resolved = lat.spacing < params.pitch();
  return lat;
}

SpotLattice round_trip_lattice(const SpotLattice& lat, const OpticsParams& params) {
  if (lat.round < 1) throw ContractViolation("round trip requires a lattice at round >= 1");
  params.validate();
  const auto [phi, prism] = dove_rotation_angle(lat.round);
  (void)prism;
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  const double half = params.spacing / 2.0;

  SpotLattice out;
  out.round = lat.round + 1;
  out.spacing = lat.spacing / 2.0;
  out.positions.resize(lat.positions.size() * 2);
  for (std::size_t p = 0; p < lat.positions.size(); ++p) {
    const Vec2 r = lat.positions[p];
    // Dove prism: rotate by phi about the centre.
    const double rotated_y = r.x * s + r.y * c;
    // Cylindrical telescope: stripe at the projected height, magnified by
    // 1/cos(phi) across the stripe to undo the rotation's foreshortening.
    const double stripe_y = rotated_y / c;
    // Slit pair: branch 0 on the left, branch 1 on the right.
    out.positions[2 * p] = Vec2{-half, stripe_y};
    out.positions[2 * p + 1] = Vec2{half, stripe_y};
  }
  out.under_resolved = out.spacing < params.pitch();
  return out;
}

SpotLattice build_lattice(int rounds, const OpticsParams& params) {
  if (rounds < 1) throw ContractViolation("lattice needs at least one round");
  SpotLattice lat = initial_lattice(params);
  while (lat.round < rounds) lat = round_trip_lattice(lat, params);
  return lat;
}

double min_pair_distance(std::span<const Vec2> points) {
  double best = std::numeric_limits<double>::infinity();
  if (points.size() < 2) return best;
  std::vector<Vec2> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const Vec2& a, const Vec2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  // Sweep in x; `active` holds points within `best` of the sweep line, by y.
  std::multiset<std::pair<double, double>> active;
  std::size_t left = 0;
  for (const auto& p : sorted) {
    while (left < sorted.size() && p.x - sorted[left].x > best) {
      active.erase(active.find({sorted[left].y, sorted[left].x}));
      ++left;
    }
    for (auto it = active.lower_bound({p.y - best, -std::numeric_limits<double>::infinity()});
         it != active.end() && it->first <= p.y + best; ++it) {
      best = std::min(best, std::hypot(p.x - it->second, p.y - it->first));
    }
    active.emplace(p.y, p.x);
  }
  return best;
}

double lattice_extent(const SpotLattice& lat) {
  if (lat.count() < 2) return 0.0;
  return static_cast<double>(lat.count()) * min_pair_distance(lat.positions);
}

int resolvable_rounds(double d, double delta) {
  if (!(d > 0.0) || !(delta > 0.0)) throw DomainError("spacing and spot size must be positive");
  if (d < delta) return 0;
  // Slack absorbs rounding in d/delta at exact powers of two.
  return static_cast<int>(std::floor(1.0 + std::log2(d / delta) + 1e-12));
}

}  // namespace djring::optics
