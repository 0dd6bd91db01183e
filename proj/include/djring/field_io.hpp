#pragma once

#include <ostream>
#include <string>

#include "djring/optics.hpp"

namespace djring::optics {

// Header `x,y,re,im` (spatial) or `u,v,re,im` (frequency), one sample per row
// in row-major order, physical coordinates.
void write_field_csv(std::ostream& out, const Field2D& field);

// 16-bit binary PGM (P5, maxval 65535, big-endian) of |s|^2 scaled so the
// brightest sample maps to 65535. Returns the normalization (max intensity).
double write_intensity_pgm(std::ostream& out, const Field2D& field);

// Writes `path` and `path + ".txt"`, the sidecar recording the normalization.
void save_intensity_pgm(const std::string& path, const Field2D& field);
void save_field_csv(const std::string& path, const Field2D& field);

}  // namespace djring::optics
