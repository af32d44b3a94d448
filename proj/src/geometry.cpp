#include "micz/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace micz {
namespace geometry {

namespace {
constexpr double kPi = std::numbers::pi;
}

double ProjectivePoint::radius() const { return std::sqrt(x1 * x1 + x2 * x2 + x3 * x3); }

double conformal_factor(const PhysParams& p, double r) {
  if (r < 0.0) throw std::domain_error("conformal_factor: negative radius");
  switch (p.geometry) {
    case Geometry::Flat:
      return 1.0;
    case Geometry::Sphere: {
      const double t = 1.0 + r * r / (4.0 * p.r_curv * p.r_curv);
      return 1.0 / (t * t);
    }
    case Geometry::Hyperboloid: {
      if (r >= 2.0 * p.r_curv)
        throw std::domain_error("conformal_factor: hyperboloid requires r < 2 R0");
      const double t = 1.0 - r * r / (4.0 * p.r_curv * p.r_curv);
      return 1.0 / (t * t);
    }
  }
  throw std::logic_error("unreachable");
}

HyperAngles projective_to_angles(const PhysParams& p, const ProjectivePoint& pt) {
  const double r = pt.radius();
  HyperAngles a;
  if (r > 0.0) {
    a.theta = std::acos(std::clamp(pt.x3 / r, -1.0, 1.0));
    a.phi = std::atan2(pt.x2, pt.x1);
    if (a.phi < 0.0) a.phi += 2.0 * kPi;
  }
  switch (p.geometry) {
    case Geometry::Flat:
      a.radial = r;
      break;
    case Geometry::Sphere:
      a.radial = 2.0 * std::atan(r / (2.0 * p.r_curv));
      break;
    case Geometry::Hyperboloid:
      if (r >= 2.0 * p.r_curv)
        throw std::domain_error("projective_to_angles: hyperboloid requires r < 2 R0");
      a.radial = 2.0 * std::atanh(r / (2.0 * p.r_curv));
      break;
  }
  return a;
}

ProjectivePoint angles_to_projective(const PhysParams& p, const HyperAngles& a) {
  double rho = 0.0;
  switch (p.geometry) {
    case Geometry::Flat:
      rho = a.radial;
      break;
    case Geometry::Sphere:
      if (a.radial >= kPi)
        throw std::domain_error("angles_to_projective: chi = pi maps to infinity");
      rho = 2.0 * p.r_curv * std::tan(0.5 * a.radial);
      break;
    case Geometry::Hyperboloid:
      rho = 2.0 * p.r_curv * std::tanh(0.5 * a.radial);
      break;
  }
  const double st = std::sin(a.theta);
  return ProjectivePoint{rho * st * std::cos(a.phi), rho * st * std::sin(a.phi),
                         rho * std::cos(a.theta)};
}

double central_potential(const PhysParams& p, double r) {
  if (r <= 0.0) throw std::domain_error("central_potential: requires r > 0");
  switch (p.geometry) {
    case Geometry::Flat:
      return -p.e2 / r;
    case Geometry::Sphere:
      return -(1.0 - r * r / (4.0 * p.r_curv * p.r_curv)) * p.e2 / r;
    case Geometry::Hyperboloid:
      if (r >= 2.0 * p.r_curv)
        throw std::domain_error("central_potential: hyperboloid requires r < 2 R0");
      // -(e2/R0) coth(tau) + e2/R0 with coth(tau) = (1 + r^2/4R0^2) R0/r
      return -(1.0 + r * r / (4.0 * p.r_curv * p.r_curv)) * p.e2 / r + p.e2 / p.r_curv;
  }
  throw std::logic_error("unreachable");
}

double potential_gmicz(const PhysParams& p, const ProjectivePoint& pt) {
  const double r = pt.radius();
  if (r <= 0.0) throw std::domain_error("potential_gmicz: singular at the origin");
  const double g = conformal_factor(p, r);

  const double s = p.s.value();
  double perturb = p.hbar * p.hbar * s * s / (2.0 * p.mu * r * r);
  if (p.lambda1 != 0.0) {
    const double d = r * (r + pt.x3);
    if (d <= 0.0) throw std::domain_error("potential_gmicz: lambda1 term singular on the x3 < 0 axis");
    perturb += p.lambda1 / d;
  }
  if (p.lambda2 != 0.0) {
    const double d = r * (r - pt.x3);
    if (d <= 0.0) throw std::domain_error("potential_gmicz: lambda2 term singular on the x3 > 0 axis");
    perturb += p.lambda2 / d;
  }
  return perturb / g + central_potential(p, r);
}

double coulomb_term(const PhysParams& p, double x) {
  const double h2 = p.hbar * p.hbar;
  switch (p.geometry) {
    case Geometry::Flat:
      return 2.0 * p.mu * p.e2 / (h2 * x);
    case Geometry::Sphere:
      return 2.0 * p.mu * p.e2 * p.r_curv / h2 / std::tan(x);
    case Geometry::Hyperboloid:
      return 2.0 * p.mu * p.e2 * p.r_curv / h2 / std::tanh(x);
  }
  throw std::logic_error("unreachable");
}

double energy_scale(const PhysParams& p) {
  const double h2 = p.hbar * p.hbar;
  if (p.geometry == Geometry::Flat) return 2.0 * p.mu / h2;
  return 2.0 * p.mu * p.r_curv * p.r_curv / h2;
}

double energy_offset(const PhysParams& p) {
  return p.geometry == Geometry::Hyperboloid ? p.e2 / p.r_curv : 0.0;
}

double metric_s(const PhysParams& p, double x) {
  switch (p.geometry) {
    case Geometry::Flat: return x;
    case Geometry::Sphere: return std::sin(x);
    case Geometry::Hyperboloid: return std::sinh(x);
  }
  throw std::logic_error("unreachable");
}

int metric_s_curvature(const PhysParams& p) {
  switch (p.geometry) {
    case Geometry::Flat: return 0;
    case Geometry::Sphere: return -1;
    case Geometry::Hyperboloid: return 1;
  }
  throw std::logic_error("unreachable");
}

}  // namespace geometry
}  // namespace micz
