#include "djring/report.hpp"

#include <cstdio>

namespace djring {

Verdict verdict_from_ratio(double ratio, double epsilon) {
  if (ratio > 1.0 - epsilon) return Verdict::Constant;
  if (ratio < epsilon) return Verdict::Balanced;
  return Verdict::Biased;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Constant: return "Constant";
    case Verdict::Balanced: return "Balanced";
    case Verdict::Biased: return "Biased";
  }
  return "?";
}

namespace cli {

const char* to_string(Mode mode) { return mode == Mode::Abstract ? "abstract" : "optical"; }

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

void print_report(std::ostream& out, const RunReport& r) {
  auto kv = [&out](const char* key, const std::string& value) {
    out << key << " = " << value << '\n';
  };
  kv("mode", to_string(r.mode));
  kv("n", std::to_string(r.n));
  kv("class", oracle::to_string(r.function_class.tag));
  kv("zeros", std::to_string(r.function_class.zeros));
  kv("ones", std::to_string(r.function_class.ones));
  kv("readout_re", format_number(r.readout.real()));
  kv("readout_im", format_number(r.readout.imag()));
  kv("readout_abs", format_number(std::abs(r.readout)));
  kv("global_phase", r.global_phase ? "1" : "0");
  kv("intensity_ratio", format_number(r.ratio));
  kv("epsilon", format_number(r.epsilon));
  kv("verdict", djring::to_string(r.verdict));
  kv("rounds", std::to_string(r.rounds));
  kv("resolvable_rounds", std::to_string(r.resolvable_rounds));
  kv("resolvable", r.resolvable ? "true" : "false");
  if (r.optical) {
    kv("on_axis_intensity", format_number(r.optical->on_axis_intensity));
    kv("reference_intensity", format_number(r.optical->reference_intensity));
    kv("min_spacing", format_number(r.optical->min_spacing));
    kv("spatial_power", format_number(r.optical->spatial_power));
    kv("fourier_power", format_number(r.optical->fourier_power));
  }
  kv("warnings", std::to_string(r.warnings.size()));
  for (const auto& w : r.warnings) kv("warning", w);
}

}  // namespace cli
}  // namespace djring
