#include "djring/field_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <stdexcept>

namespace djring::optics {

void write_field_csv(std::ostream& out, const Field2D& field) {
  const bool spatial = field.domain() == Domain::Spatial;
  out << (spatial ? "x,y,re,im\n" : "u,v,re,im\n");
  out.precision(15);
  for (int r = 0; r < field.size(); ++r) {
    const double y = field.coordinate(r);
    for (int c = 0; c < field.size(); ++c) {
      const auto& s = field.at(r, c);
      out << field.coordinate(c) << ',' << y << ',' << s.real() << ',' << s.imag() << '\n';
    }
  }
}

double write_intensity_pgm(std::ostream& out, const Field2D& field) {
  double peak = 0.0;
  for (const auto& s : field.samples()) peak = std::max(peak, std::norm(s));
  out << "P5\n" << field.size() << ' ' << field.size() << "\n65535\n";
  for (const auto& s : field.samples()) {
    const double scaled = peak > 0.0 ? std::norm(s) / peak * 65535.0 : 0.0;
    const auto v = static_cast<std::uint16_t>(std::clamp(std::lround(scaled), 0L, 65535L));
    out.put(static_cast<char>(v >> 8));
    out.put(static_cast<char>(v & 0xFF));
  }
  return peak;
}

void save_intensity_pgm(const std::string& path, const Field2D& field) {
  std::ofstream img(path, std::ios::binary);
  if (!img) throw std::runtime_error("cannot write '" + path + "'");
  const double peak = write_intensity_pgm(img, field);
  std::ofstream side(path + ".txt");
  if (!side) throw std::runtime_error("cannot write '" + path + ".txt'");
  side.precision(15);
  side << "max_intensity = " << peak << "\nmaxval = 65535\n"
       << "pitch = " << field.pitch() << "\nsize = " << field.size() << '\n';
}

void save_field_csv(const std::string& path, const Field2D& field) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  write_field_csv(out, field);
}

}  // namespace djring::optics
