#include "micz/angular.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "micz/specfun.hpp"

namespace micz {
namespace angular {

namespace {
constexpr double kPi = std::numbers::pi;
using specfun::log_factorial;
using specfun::log_gamma;
}  // namespace

AngularState make_angular_state(const PhysParams& p, const QuantumNumbers& q) {
  return AngularState{p, q, derive_notation(p, q)};
}

std::complex<double> z_eval(const AngularState& st, double theta, double phi) {
  const auto& d = st.d;
  const double j = st.q.j.value();
  const double mp = d.m_plus.value();
  const std::int64_t degree = (st.q.j - d.m_plus).as_int();

  const double log_pref =
      0.5 * (std::log(2.0 * d.j_tilde + 1.0) + log_factorial(degree) +
             log_gamma(j + d.m1 + d.m2 - mp + 1.0) - std::log(4.0 * kPi) -
             log_gamma(j + d.m1 - mp + 1.0) - log_gamma(j + d.m2 - mp + 1.0));

  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const double body = std::pow(c, d.m1) * std::pow(s, d.m2) *
                      specfun::jacobi_p(degree, d.m2, d.m1, std::cos(theta));

  const double k = (st.q.m - st.p.s).value();  // integer by validation
  return std::exp(log_pref) * body * std::polar(1.0, k * phi);
}

double m1_squared(const PhysParams& p, std::int64_t k_mode) {
  return double(k_mode) * double(k_mode) + p.coupling1();
}

double m2_squared(const PhysParams& p, std::int64_t k_mode) {
  const double ks = double(k_mode) + 2.0 * p.s.value();  // k + 2s = m + s
  return ks * ks + p.coupling2();
}

HalfInt j3_eigenvalue(const PhysParams& p, std::int64_t k_mode) {
  return HalfInt::from_int(k_mode) + p.s;
}

std::vector<std::complex<double>> apply_m_operator(const PhysParams& p, std::int64_t k_mode,
                                                   std::span<const std::complex<double>> f,
                                                   const ThetaGrid& grid) {
  if (grid.count < 5 || f.size() != size_t(grid.count) || grid.h <= 0.0)
    throw std::invalid_argument("apply_m_operator: grid too coarse for the 5-point stencil");

  const double a_sq = m1_squared(p, k_mode);
  const double b_sq = m2_squared(p, k_mode);
  const double h = grid.h;

  std::vector<std::complex<double>> out(f.size(), 0.0);
#ifdef MICZ_HAVE_OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int i = 2; i < grid.count - 2; ++i) {
    const double th = grid.node(i);
    // 4th-order centered first and second derivatives.
    const auto d1 =
        (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / (12.0 * h);
    const auto d2 =
        (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]) / (12.0 * h * h);
    const double c2 = std::cos(0.5 * th) * std::cos(0.5 * th);
    const double s2 = std::sin(0.5 * th) * std::sin(0.5 * th);
    out[i] = -d2 - d1 / std::tan(th) + (a_sq / (4.0 * c2) + b_sq / (4.0 * s2)) * f[i];
  }
  return out;
}

}  // namespace angular
}  // namespace micz
