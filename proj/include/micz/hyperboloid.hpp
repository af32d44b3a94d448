#pragma once

#include "micz/params.hpp"

namespace micz {
namespace hyperboloid {

struct HyperBoundState {
  PhysParams p;
  QuantumNumbers q;
  DerivedNotation d;  // d.sigma = R0/(r0 (n+delta)); sigma > n+delta for bound states
  double energy = 0.0;
  double norm_a = 0.0;  // A_{nj}
};

// E = -hbar^2/(2 mu R0^2) [(n+delta)^2 - 1] - mu e^4/(2 hbar^2 (n+delta)^2) + e^2/R0.
// Throws ValidationError when the bound-state condition fails.
double hyper_energy(const PhysParams& p, const QuantumNumbers& q);

HyperBoundState make_state(const PhysParams& p, const QuantumNumbers& q);

// Number of admissible n in the (m, j) channel by normalizability,
// (n+delta)^2 < R0/r0. This is the criterion the eigen-solver confirms.
int bound_state_count(const PhysParams& p, HalfInt m, HalfInt j);

// Count from the integer-part condition n <= [sigma_n - delta - 1];
// disagrees with normalizability for marginal levels and is reported
// alongside it.
int bracket_condition_count(const PhysParams& p, HalfInt m, HalfInt j);

// Bottom of the continuous spectrum: hbar^2/(2 mu R0^2), the large-tau limit
// of the transformed quasi-radial operator.
double continuum_threshold(const PhysParams& p);

// Quasi-radial function on tau > 0, real arithmetic throughout.
double quasi_radial_eval(const HyperBoundState& st, double tau);

// Normalization constant A_{nj}, log-space Gamma ratios.
double hyper_norm_constant(const PhysParams& p, const QuantumNumbers& q);

// Integration cutoff where the normalization integrand has decayed below
// relative 1e-16, from the decay exponent 2(sigma - n - delta).
double norm_integral_cutoff(const HyperBoundState& st);

}  // namespace hyperboloid
}  // namespace micz
