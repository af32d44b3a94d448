#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "micz/half_int.hpp"

namespace micz {

enum class Geometry { Flat, Sphere, Hyperboloid };

std::string to_string(Geometry g);

// Physical parameters. Defaults are atomic units (mu = hbar = e2 = 1).
struct PhysParams {
  double mu = 1.0;       // particle mass, > 0
  double hbar = 1.0;     // > 0
  double e2 = 1.0;       // Coulomb coupling e^2, >= 0
  double lambda1 = 0.0;  // axial coupling, energy * length^2, >= 0
  double lambda2 = 0.0;  // axial coupling, energy * length^2, >= 0
  HalfInt s{};           // monopole number
  Geometry geometry = Geometry::Flat;
  double r_curv = 1.0;   // curvature radius R0 (ignored for Flat)

  double bohr_radius() const { return hbar * hbar / (mu * e2); }
  // Dimensionless combinations 4*mu*lambda_i/hbar^2 entering m1, m2.
  double coupling1() const { return 4.0 * mu * lambda1 / (hbar * hbar); }
  double coupling2() const { return 4.0 * mu * lambda2 / (hbar * hbar); }
};

struct QuantumNumbers {
  HalfInt n, j, m;
};

// Notation block derived from (params, quantum numbers).
struct DerivedNotation {
  double m1 = 0.0;       // sqrt((m-s)^2 + 4 mu lambda1/hbar^2)
  double m2 = 0.0;       // sqrt((m+s)^2 + 4 mu lambda2/hbar^2)
  HalfInt m_plus{};      // (|m+s| + |m-s|)/2
  double delta = 0.0;    // (m1+m2)/2 - m_plus
  double j_tilde = 0.0;  // j + delta
  double sigma = 0.0;    // R0/(r0 (n+delta)), curved geometries only
  double kappa = 0.0;    // 1/(r0 (n+delta)), flat bound states only
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

// Total function: returns every violated rule (empty list means valid).
// For Hyperboloid this includes the bound-state existence condition.
std::vector<std::string> validate(const PhysParams& p, const QuantumNumbers& q);

// Throws ValidationError when validate() reports violations.
DerivedNotation derive_notation(const PhysParams& p, const QuantumNumbers& q);

// m_plus for a given (m, s) without a full state.
HalfInt m_plus_of(HalfInt m, HalfInt s);

// delta depends on (m, s, couplings) only; usable before picking n, j.
double delta_of(const PhysParams& p, HalfInt m);

// All valid (n, j, m) with n <= n_max for the given parameters
// (bound-state condition not applied; see hyperboloid module for that).
std::vector<QuantumNumbers> enumerate_states(const PhysParams& p, HalfInt n_max);

}  // namespace micz
