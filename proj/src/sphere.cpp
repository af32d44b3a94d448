#include "micz/sphere.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "micz/specfun.hpp"

namespace micz {
namespace sphere {

namespace {
constexpr double kPi = std::numbers::pi;
using specfun::Complex;
using specfun::log_factorial;
using specfun::log_gamma;
}  // namespace

double sphere_energy(const PhysParams& p, const QuantumNumbers& q) {
  PhysParams ps = p;
  ps.geometry = Geometry::Sphere;
  const DerivedNotation d = derive_notation(ps, q);
  const double nd = q.n.value() + d.delta;
  const double h2 = p.hbar * p.hbar;
  return h2 / (2.0 * p.mu * p.r_curv * p.r_curv) * (nd * nd - 1.0) -
         p.mu * p.e2 * p.e2 / (2.0 * h2 * nd * nd);
}

double sphere_norm_constant(const PhysParams& p, const QuantumNumbers& q) {
  PhysParams ps = p;
  ps.geometry = Geometry::Sphere;
  const DerivedNotation d = derive_notation(ps, q);
  const double n = q.n.value();
  const double j = q.j.value();
  const double sg = d.sigma;
  const double nd = n + d.delta;
  const std::int64_t big_n = (q.n - q.j).as_int() - 1;

  // Everything in log space: e^{pi sigma/2} and |Gamma(. - i sigma)|
  // separately overflow/underflow for large sigma.
  const double log_c =
      (j + 1.0 + d.delta) * std::log(2.0) - log_gamma(2.0 * j + 2.0 * d.delta + 2.0) +
      0.5 * kPi * sg + log_gamma(Complex(j + d.delta + 1.0, -sg)).real() +
      0.5 * (std::log(nd * nd + sg * sg) + log_gamma(n + j + 2.0 * d.delta + 1.0) -
             std::log(kPi * p.r_curv * p.r_curv * p.r_curv * 2.0 * nd) - log_factorial(big_n));
  if (!std::isfinite(log_c) || log_c > 700.0)
    throw std::range_error("sphere_norm_constant: outside the documented sigma range");
  return std::exp(log_c);
}

SphereBoundState make_state(const PhysParams& p, const QuantumNumbers& q) {
  PhysParams ps = p;
  ps.geometry = Geometry::Sphere;
  if (!(ps.e2 > 0.0)) throw std::domain_error("sphere states require e2 > 0");
  SphereBoundState st{ps, q, derive_notation(ps, q), 0.0, 0.0};
  st.energy = sphere_energy(ps, q);
  st.norm_c = sphere_norm_constant(ps, q);
  return st;
}

std::complex<double> quasi_radial_complex(const SphereBoundState& st, double chi) {
  if (!(chi > 0.0 && chi < kPi)) throw std::domain_error("quasi_radial_eval: chi must be in (0, pi)");
  const auto& d = st.d;
  const double j = st.q.j.value();
  const std::int64_t big_n = (st.q.n - st.q.j).as_int() - 1;
  const double jt = d.j_tilde;

  const Complex f = specfun::hyp2f1_terminating(
      -big_n, Complex(jt + 1.0, d.sigma), Complex(2.0 * jt + 2.0, 0.0),
      1.0 - std::exp(Complex(0.0, 2.0 * chi)));
  const double amp = std::exp(std::log(st.norm_c) + jt * std::log(std::sin(chi)) - d.sigma * chi);
  return amp * std::polar(1.0, -chi * double(big_n)) * f;
}

double quasi_radial_eval(const SphereBoundState& st, double chi) {
  const auto& d = st.d;
  const double jt = d.j_tilde;
  const std::int64_t big_n = (st.q.n - st.q.j).as_int() - 1;

  specfun::SeriesDiag diag;
  const Complex f = specfun::hyp2f1_terminating(
      -big_n, Complex(jt + 1.0, d.sigma), Complex(2.0 * jt + 2.0, 0.0),
      1.0 - std::exp(Complex(0.0, 2.0 * chi)), &diag);
  if (!(chi > 0.0 && chi < kPi)) throw std::domain_error("quasi_radial_eval: chi must be in (0, pi)");
  const double amp = std::exp(std::log(st.norm_c) + jt * std::log(std::sin(chi)) - d.sigma * chi);
  const Complex val = amp * std::polar(1.0, -chi * double(big_n)) * f;

  // Reality is analytic; a surviving imaginary part beyond roundoff of the
  // series signals cancellation.
  const double roundoff_floor = 1e-14 * amp * diag.abs_sum;
  if (std::fabs(val.imag()) > 1e-10 * std::fabs(val.real()) + roundoff_floor) {
    std::ostringstream os;
    os << "quasi-radial reality check failed: |Im|=" << std::fabs(val.imag())
       << " |Re|=" << std::fabs(val.real()) << " series condition=" << diag.condition;
    throw NumericInstability(os.str(), diag.condition);
  }
  return val.real();
}

double quasi_radial_eval_alt(const SphereBoundState& st, double chi) {
  if (!(chi > 0.0 && chi < kPi)) throw std::domain_error("quasi_radial_eval_alt: chi must be in (0, pi)");
  const auto& d = st.d;
  const double n = st.q.n.value();
  const double jt = d.j_tilde;
  const double nd = n + d.delta;
  const std::int64_t big_n = (st.q.n - st.q.j).as_int() - 1;

  const Complex log_pref = log_gamma(Complex(2.0 * jt + 2.0, 0.0)) +
                           log_gamma(Complex(nd, -d.sigma)) -
                           log_gamma(Complex(n + st.q.j.value() + 2.0 * d.delta + 1.0, 0.0)) -
                           log_gamma(Complex(jt + 1.0, -d.sigma));
  const Complex f = specfun::hyp2f1_terminating(
      -big_n, Complex(jt + 1.0, d.sigma), Complex(1.0 - nd, d.sigma),
      std::exp(Complex(0.0, 2.0 * chi)));
  const double amp = std::exp(std::log(st.norm_c) + jt * std::log(std::sin(chi)) - d.sigma * chi);
  const Complex val = amp * std::polar(1.0, -chi * double(big_n)) * std::exp(log_pref) * f;
  return val.real();
}

}  // namespace sphere
}  // namespace micz
