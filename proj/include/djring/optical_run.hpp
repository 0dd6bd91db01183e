#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "djring/optics.hpp"
#include "djring/oracle.hpp"
#include "djring/verdict.hpp"

namespace djring::optics {

struct OpticalReport {
  int rounds = 0;
  double on_axis_intensity = 0.0;
  double reference_intensity = 0.0;  // constant function, same params
  double ratio = 0.0;
  Verdict verdict = Verdict::Biased;
  int resolvable_rounds = 0;
  bool resolvable = false;           // rounds <= resolvable_rounds
  double min_spacing = 0.0;          // measured on the final lattice
  double spatial_power = 0.0;        // sum |g|^2 dx dy
  double fourier_power = 0.0;        // sum |F|^2 du dv
  std::vector<std::string> warnings;
};

// Runs functions through the cavity model at fixed parameters. Lattices and
// constant-function reference intensities are cached per register size.
class OpticalBench {
 public:
  explicit OpticalBench(OpticsParams params, double epsilon = kDefaultEpsilon);

  const OpticsParams& params() const noexcept { return params_; }
  double epsilon() const noexcept { return epsilon_; }

  // Leaf phases come from the compiled tree program, (-1)^t[x].
  OpticalReport run(const oracle::TruthTable& t);

  // Arbitrary signed spot weights over a register of size n.
  OpticalReport run_weights(int n, std::span<const double> weights);

  const SpotLattice& lattice(int n);
  double reference_intensity(int n);

 private:
  OpticsParams params_;
  double epsilon_;
  std::map<int, SpotLattice> lattices_;
  std::map<int, double> references_;
};

OpticalReport run_optical(const oracle::TruthTable& t, const OpticsParams& params,
                          double epsilon = kDefaultEpsilon);

// (-1)^t[x] per leaf, read off the state produced by compile_general(t).
std::vector<double> leaf_phases(const oracle::TruthTable& t);

}  // namespace djring::optics
