#pragma once

// Shared test utilities: random valid states, ODE residual measurement with
// 6th-order stencils, sign-change scans, ulp distance.

#include <cmath>
#include <cstdint>
#include <cstring>
#include <functional>
#include <random>
#include <vector>

#include "micz/geometry.hpp"
#include "micz/params.hpp"

namespace testutil {

inline std::int64_t ulp_distance(double a, double b) {
  if (a == b) return 0;
  std::int64_t ia, ib;
  std::memcpy(&ia, &a, 8);
  std::memcpy(&ib, &b, 8);
  if (ia < 0) ia = std::int64_t(0x8000000000000000ull) - ia;
  if (ib < 0) ib = std::int64_t(0x8000000000000000ull) - ib;
  const std::int64_t d = ia - ib;
  return d < 0 ? -d : d;
}

// Random valid (params, quantum numbers) with n <= n_max. Curvature radius
// for the hyperboloid is picked large enough that the state is bound.
struct RandomState {
  micz::PhysParams p;
  micz::QuantumNumbers q;
};

inline RandomState random_state(std::mt19937& rng, micz::Geometry g, int n_max,
                                bool allow_lambda = true) {
  using micz::HalfInt;
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  micz::PhysParams p;
  p.geometry = g;
  const int s_twice = int(rng() % 5) - 2;  // s in {-1, -1/2, 0, 1/2, 1}
  p.s = HalfInt{s_twice};
  if (allow_lambda && unif(rng) < 0.7) {
    p.lambda1 = unif(rng);
    p.lambda2 = unif(rng);
  }
  const int k = int(rng() % 5) - 2;  // integer phi mode m - s
  const HalfInt m = p.s + HalfInt::from_int(k);
  const HalfInt m_plus = micz::m_plus_of(m, p.s);
  const HalfInt s_abs = p.s.abs();
  // n = |s| + t with t >= 1 and n >= m_plus + 1.
  const int t_min = int((m_plus - s_abs).twice / 2) + 1;
  const int t_lo = std::max(1, t_min);
  const int t_hi = std::max(t_lo, int(std::floor(n_max - s_abs.value())));
  const int t = t_lo + int(rng() % std::uint32_t(t_hi - t_lo + 1));
  const HalfInt n = s_abs + HalfInt::from_int(t);
  const int j_span = int((n - HalfInt::from_int(1) - m_plus).twice / 2);
  const HalfInt j = m_plus + HalfInt::from_int(int(rng() % std::uint32_t(j_span + 1)));
  micz::QuantumNumbers q{n, j, m};
  if (g == micz::Geometry::Sphere) {
    p.r_curv = 0.5 + 4.5 * unif(rng);
  } else if (g == micz::Geometry::Hyperboloid) {
    const double delta = micz::delta_of(p, m);
    const double nd = n.value() + delta;
    p.r_curv = p.bohr_radius() * (nd * nd + 1.0 + 10.0 * unif(rng));
  }
  return {p, q};
}

// 6th-order centered first/second derivatives on a uniform grid.
inline double d1_6(const std::vector<double>& f, int i, double h) {
  return (-f[i - 3] + 9 * f[i - 2] - 45 * f[i - 1] + 45 * f[i + 1] - 9 * f[i + 2] + f[i + 3]) /
         (60.0 * h);
}
inline double d2_6(const std::vector<double>& f, int i, double h) {
  return (2 * f[i - 3] - 27 * f[i - 2] + 270 * f[i - 1] - 490 * f[i] + 270 * f[i + 1] -
          27 * f[i + 2] + 2 * f[i + 3]) /
         (180.0 * h * h);
}

// Relative L2 residual of the quasi-radial equation
//   R'' + 2 (S'/S) R' + [scale (E - offset) - jt(jt+1)/S^2 + coulomb(x)] R = 0
// sampled on a uniform grid over [a, b].
inline double ode_residual(const micz::PhysParams& p, double jt, double energy,
                           const std::function<double(double)>& radial, double a, double b,
                           int n_nodes = 5000) {
  namespace geo = micz::geometry;
  const double h = (b - a) / (n_nodes - 1);
  std::vector<double> f(n_nodes);
  for (int i = 0; i < n_nodes; ++i) f[i] = radial(a + h * i);
  const double scale = geo::energy_scale(p);
  const double off = geo::energy_offset(p);
  const int curv = geo::metric_s_curvature(p);
  double num = 0.0, den = 0.0;
  for (int i = 3; i + 3 < n_nodes; ++i) {
    const double x = a + h * i;
    const double slope = curv == 0 ? 1.0 / x : (curv < 0 ? 1.0 / std::tan(x) : 1.0 / std::tanh(x));
    const double s_val = geo::metric_s(p, x);
    const double d1 = d1_6(f, i, h);
    const double d2 = d2_6(f, i, h);
    const double coef = scale * (energy - off) - jt * (jt + 1.0) / (s_val * s_val) +
                        geo::coulomb_term(p, x);
    const double res = d2 + 2.0 * slope * d1 + coef * f[i];
    const double mag = std::fabs(d2) + std::fabs(2.0 * slope * d1) +
                       (std::fabs(scale * (energy - off)) + jt * (jt + 1.0) / (s_val * s_val) +
                        std::fabs(geo::coulomb_term(p, x))) *
                           std::fabs(f[i]);
    num += res * res;
    den += mag * mag;
  }
  return std::sqrt(num / den);
}

// Number of sign changes of f over a uniform scan of (a, b).
inline int sign_changes(const std::function<double(double)>& f, double a, double b,
                        int n_nodes = 4000) {
  const double h = (b - a) / (n_nodes - 1);
  int count = 0;
  double prev = f(a);
  for (int i = 1; i < n_nodes; ++i) {
    const double cur = f(a + h * i);
    if (prev != 0.0 && cur != 0.0 && (prev < 0.0) != (cur < 0.0)) ++count;
    if (cur != 0.0) prev = cur;
  }
  return count;
}

}  // namespace testutil
