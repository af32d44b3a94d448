#include "micz/hyperboloid.hpp"

#include <cmath>
#include <stdexcept>

#include "micz/specfun.hpp"

namespace micz {
namespace hyperboloid {

using specfun::log_factorial;
using specfun::log_gamma;

double hyper_energy(const PhysParams& p, const QuantumNumbers& q) {
  PhysParams ph = p;
  ph.geometry = Geometry::Hyperboloid;
  const DerivedNotation d = derive_notation(ph, q);  // enforces the bound-state condition
  const double nd = q.n.value() + d.delta;
  const double h2 = p.hbar * p.hbar;
  return -h2 / (2.0 * p.mu * p.r_curv * p.r_curv) * (nd * nd - 1.0) -
         p.mu * p.e2 * p.e2 / (2.0 * h2 * nd * nd) + p.e2 / p.r_curv;
}

double continuum_threshold(const PhysParams& p) {
  return p.hbar * p.hbar / (2.0 * p.mu * p.r_curv * p.r_curv);
}

int bound_state_count(const PhysParams& p, HalfInt m, HalfInt j) {
  const double delta = delta_of(p, m);
  const double ratio = p.r_curv / p.bohr_radius();
  int count = 0;
  for (HalfInt n = j + HalfInt::from_int(1);; n += HalfInt::from_int(1)) {
    const double nd = n.value() + delta;
    if (!(nd * nd < ratio)) break;
    ++count;
  }
  return count;
}

int bracket_condition_count(const PhysParams& p, HalfInt m, HalfInt j) {
  const double delta = delta_of(p, m);
  const double ratio = p.r_curv / p.bohr_radius();
  int count = 0;
  for (HalfInt n = j + HalfInt::from_int(1);; n += HalfInt::from_int(1)) {
    const double sigma_n = ratio / (n.value() + delta);
    if (!(n.value() <= std::floor(sigma_n - delta - 1.0))) break;
    ++count;
  }
  return count;
}

double hyper_norm_constant(const PhysParams& p, const QuantumNumbers& q) {
  PhysParams ph = p;
  ph.geometry = Geometry::Hyperboloid;
  const DerivedNotation d = derive_notation(ph, q);
  const double n = q.n.value();
  const double j = q.j.value();
  const double jt = d.j_tilde;
  const double nd = n + d.delta;
  const double sg = d.sigma;
  const std::int64_t big_n = (q.n - q.j).as_int() - 1;
  if (!(sg > nd))
    throw std::domain_error("hyper_norm_constant: no bound state (sigma <= n + delta)");

  const double r3 = p.r_curv * p.r_curv * p.r_curv;
  const double log_a =
      (jt + 1.0) * std::log(2.0) - log_gamma(2.0 * jt + 2.0) +
      0.5 * (std::log(sg * sg - nd * nd) + log_gamma(n + j + 2.0 * d.delta + 1.0) +
             log_gamma(jt + sg + 1.0) - std::log(r3 * nd) - log_factorial(big_n) -
             log_gamma(sg - jt));
  return std::exp(log_a);
}

HyperBoundState make_state(const PhysParams& p, const QuantumNumbers& q) {
  PhysParams ph = p;
  ph.geometry = Geometry::Hyperboloid;
  HyperBoundState st{ph, q, derive_notation(ph, q), 0.0, 0.0};
  st.energy = hyper_energy(ph, q);
  st.norm_a = hyper_norm_constant(ph, q);
  return st;
}

double quasi_radial_eval(const HyperBoundState& st, double tau) {
  if (!(tau > 0.0)) throw std::domain_error("quasi_radial_eval: requires tau > 0");
  const auto& d = st.d;
  const double jt = d.j_tilde;
  const std::int64_t big_n = (st.q.n - st.q.j).as_int() - 1;

  const double f = specfun::hyp2f1_terminating(-big_n, jt + d.sigma + 1.0, 2.0 * jt + 2.0,
                                               1.0 - std::exp(-2.0 * tau));
  // log-space amplitude: sinh^{jt} grows while the exponential decays.
  const double log_amp = std::log(st.norm_a) + jt * std::log(std::sinh(tau)) +
                         tau * (double(big_n) - d.sigma);
  return std::exp(log_amp) * f;
}

double norm_integral_cutoff(const HyperBoundState& st) {
  const double rate = 2.0 * (st.d.sigma - st.q.n.value() - st.d.delta);
  // Integrand ~ e^{-rate*tau}; 1e-16 relative plus slack for the prefactor.
  return std::min(2000.0, (40.0 + 5.0 * st.d.j_tilde) / rate + 5.0);
}

}  // namespace hyperboloid
}  // namespace micz
