#pragma once

// Physical-layer model of the ring cavity.
//
// Frame: the two slits of a pair sit at x = -d/2 (branch 0) and x = +d/2
// (branch 1); the first two spots lie on the horizontal axis and the pattern
// centre is the origin. Each round trip rotates the pattern (Dove prism),
// stretches every spot into a horizontal stripe at its projected height
// (cylindrical telescope), and cuts each stripe with the slit pair, giving
// children p0 (left) and p1 (right) of every parent label p.

#include <complex>
#include <span>
#include <vector>

namespace djring::optics {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Vec2&) const = default;
};

struct OpticsParams {
  double spacing = 1.0;      // d, initial spot spacing
  double spot_radius = 0.5;  // delta, 1/e amplitude radius of a Gaussian spot
  int grid_size = 512;       // samples per axis, power of two
  double window = 32.0;      // physical width of the sampled plane
  double loss = 1.0;         // per-round amplitude transmission in (0, 1]

  double pitch() const noexcept { return window / grid_size; }

  // Throws ContractViolation when a field is out of range.
  void validate() const;
};

struct SpotLattice {
  int round = 0;
  std::vector<Vec2> positions;  // index == path label
  double spacing = 0.0;         // nominal minimal spot distance
  bool under_resolved = false;  // spacing below the grid pitch

  std::size_t count() const noexcept { return positions.size(); }
};

struct RotationAngles {
  double phi;            // pattern rotation, tan(phi) = 2^-k
  double prism_setting;  // Dove prism orientation, phi / 2
};

// Throws DomainError for k < 1.
RotationAngles dove_rotation_angle(int k);

// One spot at the origin (round 0, before the first slit pair).
SpotLattice single_spot_lattice();

// Round 1: two spots at (-d/2, 0) and (+d/2, 0).
SpotLattice initial_lattice(const OpticsParams& params);

// Requires lat.round >= 1.
SpotLattice round_trip_lattice(const SpotLattice& lat, const OpticsParams& params);

// Lattice after `rounds` (>= 1) rounds.
SpotLattice build_lattice(int rounds, const OpticsParams& params);

// Smallest pairwise distance (closest pair). +inf for fewer than two points.
double min_pair_distance(std::span<const Vec2> points);

// Pattern length: spot count times measured minimal spacing.
double lattice_extent(const SpotLattice& lat);

// floor(1 + log2(d / delta)); 0 when d < delta. Throws DomainError unless
// both are positive.
int resolvable_rounds(double d, double delta);

enum class Domain { Spatial, Frequency };

// Square grid of complex samples. Index i maps to coordinate (i - size/2) *
// pitch, so the origin is sample (size/2, size/2). Rows run along y (or v),
// columns along x (or u).
class Field2D {
 public:
  Field2D(int size, double pitch, Domain domain);

  int size() const noexcept { return size_; }
  double pitch() const noexcept { return pitch_; }
  Domain domain() const noexcept { return domain_; }
  double coordinate(int index) const noexcept { return (index - size_ / 2) * pitch_; }

  std::complex<double>& at(int row, int col) { return samples_[index(row, col)]; }
  const std::complex<double>& at(int row, int col) const { return samples_[index(row, col)]; }
  std::span<std::complex<double>> samples() noexcept { return samples_; }
  std::span<const std::complex<double>> samples() const noexcept { return samples_; }
  const std::complex<double>& origin() const { return at(size_ / 2, size_ / 2); }

  // sum |s|^2 pitch^2
  double total_power() const;
  // sum s pitch^2, pairwise over rows
  std::complex<double> integral() const;

 private:
  std::size_t index(int row, int col) const noexcept {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(size_) +
           static_cast<std::size_t>(col);
  }

  int size_;
  double pitch_;
  Domain domain_;
  std::vector<std::complex<double>> samples_;
};

// samples(r) = loss^round * sum_x weights[x] * A * exp(-|r - p_x|^2 / delta^2)
// with A = 2^(-round/2), the leaf amplitude of an unbiased tree state.
// Throws ContractViolation if weights.size() != lat.count().
Field2D synthesize_field(const SpotLattice& lat, std::span<const double> weights,
                         const OpticsParams& params);

// F(u, v) = pitch^2 sum g(x, y) exp(-i 2 pi (u x + v y)) on the frequency
// grid u = (m - N/2) / window, so F at the origin is the plane integral of g.
Field2D lens_fourier(const Field2D& field);

// |F(0, 0)|^2. Requires a Frequency-domain field.
double on_axis_intensity(const Field2D& ft);

}  // namespace djring::optics
