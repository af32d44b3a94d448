#pragma once

#include <complex>
#include <span>
#include <vector>

#include "micz/params.hpp"

namespace micz {
namespace angular {

struct AngularState {
  PhysParams p;
  QuantumNumbers q;
  DerivedNotation d;
};

// Validates and derives the notation block.
AngularState make_angular_state(const PhysParams& p, const QuantumNumbers& q);

// Z^{(s)}_{jm}(theta, phi): normalized angular eigenfunction.
std::complex<double> z_eval(const AngularState& st, double theta, double phi);

// Uniform theta grid: nodes theta0 + i*h, i = 0..count-1.
struct ThetaGrid {
  double theta0 = 0.0;
  double h = 0.0;
  int count = 0;
  double node(int i) const { return theta0 + h * i; }
};

// Applies the angular invariant operator to samples of F(theta) carrying the
// phi mode e^{i k phi}, k = m - s. Fourth-order centered stencils; entries
// [2, count-3] of the result are valid, the two nodes at each edge are zero.
// Throws std::invalid_argument when the grid cannot hold the stencil.
std::vector<std::complex<double>> apply_m_operator(const PhysParams& p, std::int64_t k_mode,
                                                   std::span<const std::complex<double>> f,
                                                   const ThetaGrid& grid);

// J3 = -i d/phi + s acting on the e^{i k phi} mode: eigenvalue k + s, exact.
HalfInt j3_eigenvalue(const PhysParams& p, std::int64_t k_mode);

// Effective m1^2, m2^2 of the operator for an arbitrary phi mode k.
double m1_squared(const PhysParams& p, std::int64_t k_mode);
double m2_squared(const PhysParams& p, std::int64_t k_mode);

}  // namespace angular
}  // namespace micz
