#pragma once

#include <complex>

#include "micz/params.hpp"

namespace micz {
namespace flat {

struct FlatBoundState {
  PhysParams p;
  QuantumNumbers q;
  DerivedNotation d;
  double energy = 0.0;  // < 0
};

// E = -mu e^4 / (2 hbar^2 (n + delta)^2); depends on q through n and m only.
double flat_energy(const PhysParams& p, const QuantumNumbers& q);

FlatBoundState make_state(const PhysParams& p, const QuantumNumbers& q);

// Normalized radial function R_{nj}(r), r > 0.
double radial_eval(const FlatBoundState& st, double r);

// psi = R(r) Z(theta, phi).
std::complex<double> wavefunction_eval(const PhysParams& p, const QuantumNumbers& q, double r,
                                       double theta, double phi);

}  // namespace flat
}  // namespace micz
