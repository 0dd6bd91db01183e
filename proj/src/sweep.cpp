#include "djring/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>

#include "djring/errors.hpp"
#include "djring/optical_run.hpp"
#include "djring/oracle.hpp"

namespace djring::cli {

namespace {

// C(n, k), saturating at `cap` + 1.
std::uint64_t choose_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  k = std::min(k, n - k);
  long double value = 1.0L;
  for (std::uint64_t i = 1; i <= k; ++i) {
    value = value * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    if (value > static_cast<long double>(cap)) return cap + 1;
  }
  return static_cast<std::uint64_t>(std::llround(value));
}

}  // namespace

std::vector<SweepRow> bias_sweep(int n, Mode mode, const optics::OpticsParams& params,
                                 std::size_t samples, std::uint64_t seed) {
  if (n < 1 || n > 12) throw ResourceError("sweep supports 1 <= n <= 12");
  if (samples < 1) throw ContractViolation("sweep needs at least one sample per level");
  std::mt19937_64 rng(seed);
  std::optional<optics::OpticalBench> bench;
  if (mode == Mode::Optical) bench.emplace(params);

  auto measure = [&](const oracle::TruthTable& t) {
    if (bench) return bench->run(t).ratio;
    const auto state = tree::run_program(oracle::compile_general(t));
    return std::norm(tree::readout_amplitude(state));
  };

  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<SweepRow> rows;
  rows.reserve(size + 1);
  for (std::uint64_t n1 = 0; n1 <= size; ++n1) {
    SweepRow row;
    row.n1 = n1;
    const double bias = (static_cast<double>(size - n1) - static_cast<double>(n1)) /
                        static_cast<double>(size);
    row.predicted = bias * bias;
    double total = 0.0;
    if (choose_capped(size, n1, samples) <= samples) {
      // Enumerate in lexicographic order starting from ones at the back.
      std::vector<std::uint8_t> bits(size, 0);
      std::fill(bits.end() - static_cast<std::ptrdiff_t>(n1), bits.end(), 1);
      do {
        total += measure(oracle::TruthTable(n, bits));
        ++row.tables;
      } while (std::next_permutation(bits.begin(), bits.end()));
    } else {
      for (std::size_t s = 0; s < samples; ++s) {
        total += measure(oracle::random_table_with_ones(n, n1, rng));
        ++row.tables;
      }
    }
    row.measured = total / static_cast<double>(row.tables);
    row.abs_err = std::abs(row.measured - row.predicted);
    rows.push_back(row);
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "n1,predicted,measured,abs_err\n";
  for (const auto& r : rows) {
    out << r.n1 << ',' << format_number(r.predicted) << ',' << format_number(r.measured) << ','
        << format_number(r.abs_err) << '\n';
  }
}

}  // namespace djring::cli
