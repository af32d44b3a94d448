#include "micz/flat.hpp"

#include <cmath>
#include <stdexcept>

#include "micz/angular.hpp"
#include "micz/specfun.hpp"

namespace micz {
namespace flat {

using specfun::log_factorial;
using specfun::log_gamma;

double flat_energy(const PhysParams& p, const QuantumNumbers& q) {
  PhysParams pf = p;
  pf.geometry = Geometry::Flat;
  const DerivedNotation d = derive_notation(pf, q);
  const double nd = q.n.value() + d.delta;
  return -p.mu * p.e2 * p.e2 / (2.0 * p.hbar * p.hbar * nd * nd);
}

FlatBoundState make_state(const PhysParams& p, const QuantumNumbers& q) {
  PhysParams pf = p;
  pf.geometry = Geometry::Flat;
  if (!(pf.e2 > 0.0)) throw std::domain_error("flat bound states require e2 > 0");
  FlatBoundState st{pf, q, derive_notation(pf, q), 0.0};
  st.energy = flat_energy(pf, q);
  return st;
}

double radial_eval(const FlatBoundState& st, double r) {
  if (!(r > 0.0)) throw std::domain_error("radial_eval: requires r > 0");
  const auto& d = st.d;
  const double n = st.q.n.value();
  const double j = st.q.j.value();
  const std::int64_t big_n = (st.q.n - st.q.j).as_int() - 1;  // series degree
  const double kappa = d.kappa;
  const double r0 = st.p.bohr_radius();

  const double log_pref = std::log(2.0 * kappa * kappa) + 0.5 * std::log(r0) -
                          log_gamma(2.0 * j + 2.0 * d.delta + 2.0) +
                          0.5 * (log_gamma(n + j + 2.0 * d.delta + 1.0) - log_factorial(big_n));
  const double x = 2.0 * kappa * r;
  const double body = (j + d.delta) * std::log(x) - kappa * r;
  return std::exp(log_pref + body) *
         specfun::hyp1f1_terminating(-big_n, 2.0 * j + 2.0 * d.delta + 2.0, x);
}

std::complex<double> wavefunction_eval(const PhysParams& p, const QuantumNumbers& q, double r,
                                       double theta, double phi) {
  const FlatBoundState st = make_state(p, q);
  const auto ang = angular::make_angular_state(st.p, q);
  return radial_eval(st, r) * angular::z_eval(ang, theta, phi);
}

}  // namespace flat
}  // namespace micz
