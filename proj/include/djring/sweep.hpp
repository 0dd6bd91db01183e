#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "djring/optics.hpp"
#include "djring/report.hpp"

namespace djring::cli {

struct SweepRow {
  std::uint64_t n1 = 0;     // number of ones in the truth table
  double predicted = 0.0;   // ((N0 - N1) / 2^n)^2
  double measured = 0.0;    // mean ratio over the tables tried
  double abs_err = 0.0;
  std::size_t tables = 0;
};

// For every N1 in [0, 2^n]: enumerates all tables with N1 ones when there are
// at most `samples` of them, otherwise draws `samples` seeded random tables.
std::vector<SweepRow> bias_sweep(int n, Mode mode, const optics::OpticsParams& params,
                                 std::size_t samples, std::uint64_t seed);

// Columns n1,predicted,measured,abs_err.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace djring::cli
