#include "djring/quantum_ref.hpp"

#include <cmath>

#include "djring/errors.hpp"

namespace djring::qref {

Register Register::basis_zero(int n) {
  if (n < 1 || n > tree::kDefaultMaxLevel) throw ContractViolation("register size out of range");
  Register reg;
  reg.n = n;
  reg.amps.assign(std::size_t{1} << n, {0.0, 0.0});
  reg.amps[0] = {1.0, 0.0};
  return reg;
}

double Register::norm2() const {
  double total = 0.0;
  for (const auto& a : amps) total += std::norm(a);
  return total;
}

Register hadamard_all(Register reg) {
  if (reg.amps.size() != (std::size_t{1} << reg.n)) {
    throw ContractViolation("register amplitude count must be 2^n");
  }
  const std::size_t size = reg.amps.size();
  for (std::size_t half = 1; half < size; half <<= 1) {
    for (std::size_t block = 0; block < size; block += 2 * half) {
      for (std::size_t i = block; i < block + half; ++i) {
        const auto a = reg.amps[i];
        const auto b = reg.amps[i + half];
        reg.amps[i] = (a + b) * M_SQRT1_2;
        reg.amps[i + half] = (a - b) * M_SQRT1_2;
      }
    }
  }
  return reg;
}

Register oracle_phase(Register reg, const oracle::TruthTable& t) {
  if (t.n() != reg.n || reg.amps.size() != t.size()) {
    throw ContractViolation("oracle size does not match register size");
  }
  for (std::size_t x = 0; x < reg.amps.size(); ++x) {
    if (t[x]) reg.amps[x] = -reg.amps[x];
  }
  return reg;
}

Register dj_output(const oracle::TruthTable& t) {
  return hadamard_all(oracle_phase(hadamard_all(Register::basis_zero(t.n())), t));
}

double zero_amplitude_closed_form(const oracle::TruthTable& t) {
  const auto cls = oracle::classify_table(t);
  return std::ldexp(static_cast<double>(cls.zeros) - static_cast<double>(cls.ones), -t.n());
}

}  // namespace djring::qref
