#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>

#include "djring/errors.hpp"
#include "djring/optics.hpp"

namespace djring::optics {

namespace {

// exp(-t^2) underflows to zero beyond this |t|.
constexpr double kGaussianCutoff = 27.3;

struct PlanDeleter {
  void operator()(fftw_plan_s* plan) const { fftw_destroy_plan(plan); }
};

}  // namespace

Field2D::Field2D(int size, double pitch, Domain domain)
    : size_(size), pitch_(pitch), domain_(domain) {
  if (size < 2 || size % 2 != 0) throw ContractViolation("field size must be even and >= 2");
  if (!(pitch > 0.0)) throw ContractViolation("field pitch must be positive");
  samples_.assign(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), {0.0, 0.0});
}

double Field2D::total_power() const {
  double total = 0.0;
  for (const auto& s : samples_) total += std::norm(s);
  return total * pitch_ * pitch_;
}

std::complex<double> Field2D::integral() const {
  // Row sums, then a pairwise reduction over rows.
  std::vector<std::complex<double>> rows(static_cast<std::size_t>(size_));
  for (int r = 0; r < size_; ++r) {
    std::complex<double> acc{0.0, 0.0};
    for (int c = 0; c < size_; ++c) acc += at(r, c);
    rows[static_cast<std::size_t>(r)] = acc;
  }
  for (std::size_t width = rows.size(); width > 1; width = (width + 1) / 2) {
    for (std::size_t i = 0; i < (width + 1) / 2; ++i) {
      rows[i] = 2 * i + 1 < width ? rows[2 * i] + rows[2 * i + 1] : rows[2 * i];
    }
  }
  return rows.front() * (pitch_ * pitch_);
}

Field2D synthesize_field(const SpotLattice& lat, std::span<const double> weights,
                         const OpticsParams& params) {
  params.validate();
  if (weights.size() != lat.count()) {
    throw ContractViolation("need one weight per spot (" + std::to_string(lat.count()) +
                            "), got " + std::to_string(weights.size()));
  }
  const int size = params.grid_size;
  Field2D field(size, params.pitch(), Domain::Spatial);
  const double delta = params.spot_radius;
  const double amplitude = std::pow(params.loss, lat.round) *
                           std::ldexp(lat.round % 2 == 0 ? 1.0 : M_SQRT1_2, -(lat.round / 2));

  auto profile_range = [&](double centre) {
    const double reach = kGaussianCutoff * delta;
    const int lo = std::max(0, static_cast<int>(std::floor((centre - reach) / field.pitch())) + size / 2);
    const int hi = std::min(size - 1, static_cast<int>(std::ceil((centre + reach) / field.pitch())) + size / 2);
    return std::pair{lo, hi};
  };

  // The Gaussian is separable; spots sharing an x position share their x
  // profile, so each column group costs one outer product.
  std::map<double, std::vector<std::size_t>> columns;
  for (std::size_t i = 0; i < lat.count(); ++i) columns[lat.positions[i].x].push_back(i);

  std::vector<double> x_profile(static_cast<std::size_t>(size));
  std::vector<double> y_sum(static_cast<std::size_t>(size));
  for (const auto& [x0, members] : columns) {
    std::fill(y_sum.begin(), y_sum.end(), 0.0);
    int row_lo = size;
    int row_hi = -1;
    for (std::size_t idx : members) {
      const double w = weights[idx];
      if (!std::isfinite(w)) throw ContractViolation("spot weights must be finite");
      if (w == 0.0) continue;
      const double y0 = lat.positions[idx].y;
      const auto [lo, hi] = profile_range(y0);
      for (int r = lo; r <= hi; ++r) {
        const double t = (field.coordinate(r) - y0) / delta;
        y_sum[static_cast<std::size_t>(r)] += w * std::exp(-t * t);
      }
      row_lo = std::min(row_lo, lo);
      row_hi = std::max(row_hi, hi);
    }
    if (row_hi < row_lo) continue;
    const auto [col_lo, col_hi] = profile_range(x0);
    for (int c = col_lo; c <= col_hi; ++c) {
      const double t = (field.coordinate(c) - x0) / delta;
      x_profile[static_cast<std::size_t>(c)] = amplitude * std::exp(-t * t);
    }
    for (int r = row_lo; r <= row_hi; ++r) {
      const double ry = y_sum[static_cast<std::size_t>(r)];
      if (ry == 0.0) continue;
      for (int c = col_lo; c <= col_hi; ++c) {
        field.at(r, c) += ry * x_profile[static_cast<std::size_t>(c)];
      }
    }
  }
  return field;
}

Field2D lens_fourier(const Field2D& field) {
  const int n = field.size();
  const int half = n / 2;
  // Recentre so the origin sample sits at index 0, transform, and shift the
  // zero frequency back to the middle. With x_j = (j - N/2) pitch and
  // u_m = (m - N/2) / (N pitch), the kernel is exp(-2 pi i (m-N/2)(j-N/2) / N).
  std::vector<std::complex<double>> buffer(field.samples().size());
  auto wrap = [n](int i) { return static_cast<std::size_t>((i % n + n) % n); };
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      buffer[wrap(r - half) * static_cast<std::size_t>(n) + wrap(c - half)] = field.at(r, c);
    }
  }
  auto* data = reinterpret_cast<fftw_complex*>(buffer.data());
  std::unique_ptr<fftw_plan_s, PlanDeleter> plan(
      fftw_plan_dft_2d(n, n, data, data, FFTW_FORWARD, FFTW_ESTIMATE));
  if (!plan) throw std::runtime_error("FFTW could not create a plan");
  fftw_execute(plan.get());

  const double area = field.pitch() * field.pitch();
  Field2D out(n, 1.0 / (n * field.pitch()), Domain::Frequency);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      out.at(r, c) = buffer[wrap(r - half) * static_cast<std::size_t>(n) + wrap(c - half)] * area;
    }
  }
  return out;
}

double on_axis_intensity(const Field2D& ft) {
  if (ft.domain() != Domain::Frequency) {
    throw ContractViolation("on-axis intensity needs the lens output (frequency domain)");
  }
  return std::norm(ft.origin());
}

}  // namespace djring::optics
