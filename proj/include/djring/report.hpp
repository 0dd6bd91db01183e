#pragma once

#include <complex>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "djring/optical_run.hpp"
#include "djring/oracle.hpp"
#include "djring/verdict.hpp"

namespace djring::cli {

enum class Mode { Abstract, Optical };

const char* to_string(Mode mode);

struct RunReport {
  Mode mode = Mode::Abstract;
  int n = 0;
  oracle::FunctionClass function_class{oracle::Tag::Biased, 0, 0};
  std::complex<double> readout{0.0, 0.0};  // tree readout, global phase not applied
  bool global_phase = false;
  double ratio = 0.0;  // |readout|^2 (abstract) or intensity ratio (optical)
  Verdict verdict = Verdict::Biased;
  double epsilon = kDefaultEpsilon;
  int rounds = 0;
  int resolvable_rounds = 0;
  bool resolvable = false;
  std::optional<optics::OpticalReport> optical;
  std::vector<std::string> warnings;
};

// 15 significant digits.
std::string format_number(double v);

// `key = value` lines, LF endings.
void print_report(std::ostream& out, const RunReport& report);

}  // namespace djring::cli
