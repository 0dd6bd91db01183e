#pragma once

// Brute-force n-qubit register for the Deutsch-Jozsa circuit
// H^n . U_f . H^n |0...0>. Used to cross-check the tree engine and the
// optical model through an independent algebraic route.

#include <complex>
#include <vector>

#include "djring/oracle.hpp"

namespace djring::qref {

struct Register {
  int n = 0;
  std::vector<std::complex<double>> amps;  // basis |z>, z1 most significant

  static Register basis_zero(int n);
  double norm2() const;
};

// amps'[z] = 2^(-n/2) sum_x (-1)^(x.z) amps[x], as n in-place butterfly passes.
Register hadamard_all(Register reg);

// amps'[x] = (-1)^(t[x]) amps[x]. Throws ContractViolation when t.n() != reg.n.
Register oracle_phase(Register reg, const oracle::TruthTable& t);

Register dj_output(const oracle::TruthTable& t);

// (1 / 2^n) sum_x (-1)^(t[x]), by direct counting.
double zero_amplitude_closed_form(const oracle::TruthTable& t);

}  // namespace djring::qref
