#pragma once

#include "micz/params.hpp"

namespace micz {
namespace geometry {

// Point in projective coordinates r = (x1, x2, x3).
struct ProjectivePoint {
  double x1 = 0.0, x2 = 0.0, x3 = 0.0;
  double radius() const;
};

// (chi, theta, phi) on the sphere, (tau, theta, phi) on the hyperboloid,
// (r, theta, phi) in flat space.
struct HyperAngles {
  double radial = 0.0;  // chi, tau or r
  double theta = 0.0;   // [0, pi]
  double phi = 0.0;     // [0, 2 pi)
};

// g(r) = (1 + eps r^2/(4 R0^2))^{-2}; identically 1 in flat space.
// Throws std::domain_error outside the geometry domain.
double conformal_factor(const PhysParams& p, double r);

HyperAngles projective_to_angles(const PhysParams& p, const ProjectivePoint& pt);
ProjectivePoint angles_to_projective(const PhysParams& p, const HyperAngles& a);

// Full generalized MICZ potential at a projective point.
// Throws on the axis when the corresponding lambda is nonzero, and at r = 0.
double potential_gmicz(const PhysParams& p, const ProjectivePoint& pt);

// Central part V(r) alone (Coulomb analog for the geometry).
double central_potential(const PhysParams& p, double r);

// Pieces of the quasi-radial equation in the natural variable
// (r, chi or tau), consumed by the eigen-solver oracle.
//
//   (1/w) (w R')' + [ energy_scale*(E - energy_offset)
//                     - jt(jt+1)/S^2 + coulomb_term(x) ] R = 0
//
// with S = x, sin x, sinh x respectively.
double coulomb_term(const PhysParams& p, double x);   // 2 mu e2 R0/hbar^2 * cot x (etc.)
double energy_scale(const PhysParams& p);             // 2 mu R0^2/hbar^2, or 2 mu/hbar^2 (flat)
double energy_offset(const PhysParams& p);            // e2/R0 on the hyperboloid, else 0
double metric_s(const PhysParams& p, double x);       // S(x)
// d^2S/dx^2 / S sign: 0 flat, -1 sphere, +1 hyperboloid.
int metric_s_curvature(const PhysParams& p);

}  // namespace geometry
}  // namespace micz
