#pragma once

#include <complex>
#include <stdexcept>

#include "micz/params.hpp"

namespace micz {
namespace sphere {

// Raised when the reality check on the quasi-radial value fails.
class NumericInstability : public std::runtime_error {
 public:
  NumericInstability(const std::string& what, double condition)
      : std::runtime_error(what), condition_(condition) {}
  double condition() const { return condition_; }

 private:
  double condition_ = 0.0;
};

struct SphereBoundState {
  PhysParams p;
  QuantumNumbers q;
  DerivedNotation d;  // d.sigma = R0/(r0 (n+delta))
  double energy = 0.0;
  double norm_c = 0.0;  // C_{nj}
};

// E = hbar^2/(2 mu R0^2) [(n+delta)^2 - 1] - mu e^4/(2 hbar^2 (n+delta)^2).
double sphere_energy(const PhysParams& p, const QuantumNumbers& q);

SphereBoundState make_state(const PhysParams& p, const QuantumNumbers& q);

// Normalization constant C_{nj}, assembled in log space.
double sphere_norm_constant(const PhysParams& p, const QuantumNumbers& q);

// Quasi-radial function on chi in (0, pi). Real after the built-in reality
// check; throws NumericInstability when the imaginary part survives.
double quasi_radial_eval(const SphereBoundState& st, double chi);

// Raw complex value of the defining expression, before the reality check.
std::complex<double> quasi_radial_complex(const SphereBoundState& st, double chi);

// Same function through the transformed hypergeometric representation
// of argument e^{2 i chi}; agrees pointwise where well-conditioned.
double quasi_radial_eval_alt(const SphereBoundState& st, double chi);

}  // namespace sphere
}  // namespace micz
