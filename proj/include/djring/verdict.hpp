#pragma once

namespace djring {

enum class Verdict { Constant, Balanced, Biased };

// Threshold on the on-axis intensity ratio (function / constant reference).
inline constexpr double kDefaultEpsilon = 1e-6;

// Constant if ratio > 1 - epsilon, Balanced if ratio < epsilon, else Biased.
Verdict verdict_from_ratio(double ratio, double epsilon = kDefaultEpsilon);

const char* to_string(Verdict v);

}  // namespace djring
