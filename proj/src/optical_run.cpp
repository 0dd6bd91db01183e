#include "djring/optical_run.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "djring/errors.hpp"
#include "djring/tree_core.hpp"

namespace djring::optics {

namespace {

// Gaussian tails beyond this many radii are below 1e-15 of the peak.
constexpr double kTruncationRadii = 6.0;

std::string format_double(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

}  // namespace

std::vector<double> leaf_phases(const oracle::TruthTable& t) {
  const auto program = oracle::compile_general(t);
  const auto state = tree::run_program(program);
  const double global = program.global_phase ? -1.0 : 1.0;
  std::vector<double> phases;
  phases.reserve(state.size());
  for (int s : tree::leaf_signs(state)) phases.push_back(global * s);
  return phases;
}

OpticalBench::OpticalBench(OpticsParams params, double epsilon)
    : params_(params), epsilon_(epsilon) {
  params_.validate();
  if (!(epsilon > 0.0 && epsilon < 0.5)) throw ContractViolation("epsilon must lie in (0, 0.5)");
}

const SpotLattice& OpticalBench::lattice(int n) {
  auto it = lattices_.find(n);
  if (it == lattices_.end()) it = lattices_.emplace(n, build_lattice(n, params_)).first;
  return it->second;
}

double OpticalBench::reference_intensity(int n) {
  auto it = references_.find(n);
  if (it == references_.end()) {
    const auto& lat = lattice(n);
    const std::vector<double> ones(lat.count(), 1.0);
    const double value = on_axis_intensity(lens_fourier(synthesize_field(lat, ones, params_)));
    it = references_.emplace(n, value).first;
  }
  return it->second;
}

OpticalReport OpticalBench::run(const oracle::TruthTable& t) {
  const auto phases = leaf_phases(t);
  return run_weights(t.n(), phases);
}

OpticalReport OpticalBench::run_weights(int n, std::span<const double> weights) {
  if (n < 1) throw ContractViolation("optical run needs n >= 1");
  const auto& lat = lattice(n);
  const Field2D field = synthesize_field(lat, weights, params_);
  const Field2D ft = lens_fourier(field);

  OpticalReport report;
  report.rounds = n;
  report.on_axis_intensity = on_axis_intensity(ft);
  report.reference_intensity = reference_intensity(n);
  report.ratio = report.on_axis_intensity / report.reference_intensity;
  report.verdict = verdict_from_ratio(report.ratio, epsilon_);
  report.resolvable_rounds = resolvable_rounds(params_.spacing, params_.spot_radius);
  report.resolvable = n <= report.resolvable_rounds;
  report.min_spacing = min_pair_distance(lat.positions);
  report.spatial_power = field.total_power();
  report.fourier_power = ft.total_power();

  if (lat.under_resolved) {
    report.warnings.push_back("spot spacing " + format_double(lat.spacing) +
                              " is below the grid pitch " + format_double(params_.pitch()));
  }
  double reach = 0.0;
  for (const auto& p : lat.positions) reach = std::max({reach, std::abs(p.x), std::abs(p.y)});
  reach += kTruncationRadii * params_.spot_radius;
  if (reach > params_.window / 2.0) {
    report.warnings.push_back("spot tails reach the window edge (" + format_double(reach) +
                              " > " + format_double(params_.window / 2.0) +
                              "); the field is truncated");
  }
  const double parseval = std::abs(report.fourier_power - report.spatial_power);
  if (parseval > 1e-9 * report.spatial_power) {
    report.warnings.push_back("Parseval mismatch between field and lens output: " +
                              format_double(parseval));
  }
  return report;
}

OpticalReport run_optical(const oracle::TruthTable& t, const OpticsParams& params,
                          double epsilon) {
  OpticalBench bench(params, epsilon);
  return bench.run(t);
}

}  // namespace djring::optics
