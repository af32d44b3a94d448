#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "micz/angular.hpp"
#include "micz/flat.hpp"
#include "micz/oracle.hpp"

using namespace micz;
constexpr double kPi = std::numbers::pi;

namespace {
QuantumNumbers qn(int n, int j, int m) {
  return {HalfInt::from_int(n), HalfInt::from_int(j), HalfInt::from_int(m)};
}
}  // namespace

TEST_CASE("flat spectrum closed forms") {
  PhysParams p;
  CHECK(flat::flat_energy(p, qn(1, 0, 0)) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(flat::flat_energy(p, qn(3, 1, 0)) == doctest::Approx(-1.0 / 18.0).epsilon(1e-15));

  // delta = 1/2 example: 4 mu lambda1/hbar^2 = 3, m = 1
  p.lambda1 = 0.75;
  CHECK(flat::flat_energy(p, qn(2, 1, 1)) == doctest::Approx(-0.08).epsilon(1e-14));

  SUBCASE("j-independence at fixed (n, m)") {
    p.lambda2 = 0.3;
    const double e1 = flat::flat_energy(p, qn(4, 1, 1));
    const double e2 = flat::flat_energy(p, qn(4, 2, 1));
    const double e3 = flat::flat_energy(p, qn(4, 3, 1));
    CHECK(e1 == e2);
    CHECK(e2 == e3);
  }
}

TEST_CASE("hydrogen ground-state radial function") {
  PhysParams p;
  const auto st = flat::make_state(p, qn(1, 0, 0));
  CHECK(flat::radial_eval(st, 1.0) == doctest::Approx(2.0 * std::exp(-1.0)).epsilon(1e-13));
  CHECK(flat::radial_eval(st, 0.25) == doctest::Approx(2.0 * std::exp(-0.25)).epsilon(1e-13));
}

TEST_CASE("radial norm, oscillation count and ODE residual") {
  std::mt19937 rng(47);
  for (int it = 0; it < 25; ++it) {
    const auto rs = testutil::random_state(rng, Geometry::Flat, 8);
    const auto st = flat::make_state(rs.p, rs.q);
    const double kap = st.d.kappa;
    const double rmax = (40.0 + 10.0 * st.d.j_tilde) / kap;

    const auto norm = oracle::integrate(
        [&](double r) {
          const double v = flat::radial_eval(st, std::max(r, 1e-12));
          return v * v * r * r;
        },
        0.0, rmax, 1e-12, 1e-11);
    CHECK(std::fabs(norm.value - 1.0) < 1e-9);

    const int nodes = testutil::sign_changes(
        [&](double r) { return flat::radial_eval(st, r); }, 0.05 / kap, rmax);
    CHECK(nodes == (rs.q.n - rs.q.j).as_int() - 1);

    const double res = testutil::ode_residual(
        rs.p, st.d.j_tilde, st.energy, [&](double r) { return flat::radial_eval(st, r); },
        0.05 / kap, 40.0 / kap);
    CHECK(res < 1e-6);
  }
}

TEST_CASE("full wavefunction is the product R Z") {
  PhysParams p;
  const auto psi = flat::wavefunction_eval(p, qn(1, 0, 0), 1.0, kPi / 3.0, 0.8);
  CHECK(psi.real() ==
        doctest::Approx(2.0 * std::exp(-1.0) / std::sqrt(4.0 * kPi)).epsilon(1e-13));
  CHECK(std::fabs(psi.imag()) < 1e-15);

  SUBCASE("|psi|^2 is phi-independent") {
    p.s = HalfInt::half();
    p.lambda1 = 0.2;
    const QuantumNumbers q{HalfInt{5}, HalfInt{3}, HalfInt{1}};
    const double a = std::abs(flat::wavefunction_eval(p, q, 1.3, 1.1, 0.0));
    const double b = std::abs(flat::wavefunction_eval(p, q, 1.3, 1.1, 2.7));
    CHECK(a == doctest::Approx(b).epsilon(1e-13));
  }

  SUBCASE("3D norm factorizes") {
    p = PhysParams{};
    p.lambda2 = 0.4;
    const QuantumNumbers q = qn(3, 1, 0);
    const auto st = flat::make_state(p, q);
    const auto radial = oracle::integrate(
        [&](double r) {
          const double v = flat::radial_eval(st, std::max(r, 1e-12));
          return v * v * r * r;
        },
        0.0, 60.0 / st.d.kappa, 1e-12, 1e-11);
    const auto ang = oracle::integrate(
        [&](double th) {
          const double z = std::abs(flat::wavefunction_eval(p, q, 1.0, th, 0.0) /
                                    flat::radial_eval(st, 1.0));
          return z * z * std::sin(th);
        },
        1e-9, kPi - 1e-9, 1e-11);
    CHECK(std::fabs(radial.value * ang.value * 2.0 * kPi - 1.0) < 1e-8);
  }
}

TEST_CASE("flat spectrum equals the eigen-solver oracle") {
  PhysParams p;
  p.lambda1 = 0.75;
  const HalfInt m = HalfInt::from_int(1);
  const double delta = delta_of(p, m);  // 1/2
  const double jt = 1.0 + delta;
  const auto res = oracle::solve_quasi_radial(p, jt, 2);
  const double e1 = flat::flat_energy(p, qn(2, 1, 1));
  const double e2 = flat::flat_energy(p, qn(3, 1, 1));
  CHECK(std::fabs(res.eigenvalues[0] - e1) < 1e-6);
  CHECK(std::fabs(res.eigenvalues[1] - e2) < 1e-6);
}
