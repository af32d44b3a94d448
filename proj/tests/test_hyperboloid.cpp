#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "micz/hyperboloid.hpp"
#include "micz/oracle.hpp"

using namespace micz;

namespace {
QuantumNumbers qn(int n, int j, int m) {
  return {HalfInt::from_int(n), HalfInt::from_int(j), HalfInt::from_int(m)};
}

PhysParams hyper(double r0) {
  PhysParams p;
  p.geometry = Geometry::Hyperboloid;
  p.r_curv = r0;
  return p;
}
}  // namespace

TEST_CASE("hyperboloid spectrum closed forms") {
  const auto p = hyper(10.0);
  CHECK(hyperboloid::hyper_energy(p, qn(1, 0, 0)) == doctest::Approx(-0.4).epsilon(1e-14));
  CHECK(hyperboloid::hyper_energy(p, qn(2, 1, 0)) == doctest::Approx(-0.04).epsilon(1e-13));
  CHECK(hyperboloid::hyper_energy(p, qn(2, 0, 0)) ==
        hyperboloid::hyper_energy(p, qn(2, 1, 0)));
  // n = 4 has n^2 > R0/r0 = 10: no bound state
  CHECK_THROWS_AS(hyperboloid::hyper_energy(p, qn(4, 0, 0)), ValidationError);
  CHECK(hyperboloid::continuum_threshold(p) == doctest::Approx(0.005).epsilon(1e-15));
}

TEST_CASE("bound-state counting, both criteria") {
  const HalfInt z = HalfInt::from_int(0);
  CHECK(hyperboloid::bound_state_count(hyper(10.0), z, z) == 3);
  CHECK(hyperboloid::bound_state_count(hyper(0.5), z, z) == 0);
  CHECK(hyperboloid::bound_state_count(hyper(4.41), z, z) == 2);
  CHECK(hyperboloid::bound_state_count(hyper(100.0), z, z) == 9);
  // the integer-part condition disagrees for the marginal level at R0/r0 = 10
  CHECK(hyperboloid::bracket_condition_count(hyper(10.0), z, z) == 2);
  CHECK(hyperboloid::bracket_condition_count(hyper(0.5), z, z) == 0);
}

TEST_CASE("ground state closed-form normalization") {
  const auto p = hyper(10.0);
  const auto st = hyperboloid::make_state(p, qn(1, 0, 0));
  const double sg = st.d.sigma;
  const double r3 = p.r_curv * p.r_curv * p.r_curv;
  CHECK(st.norm_a ==
        doctest::Approx(2.0 * std::sqrt(sg * (sg * sg - 1.0) / r3)).epsilon(1e-12));
  CHECK(hyperboloid::quasi_radial_eval(st, 0.7) ==
        doctest::Approx(st.norm_a * std::exp(-sg * 0.7)).epsilon(1e-12));
  // R0^3 A^2 / (4 sigma (sigma^2 - 1)) = 1
  CHECK(r3 * st.norm_a * st.norm_a / (4.0 * sg * (sg * sg - 1.0)) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("norm constant rejects unbound states") {
  const auto p = hyper(0.5);
  CHECK_THROWS(hyperboloid::make_state(p, qn(1, 0, 0)));
}

TEST_CASE("quasi-radial norm, nodes, residual, decay rate") {
  std::mt19937 rng(59);
  for (int it = 0; it < 20; ++it) {
    const auto rs = testutil::random_state(rng, Geometry::Hyperboloid, 5);
    const auto st = hyperboloid::make_state(rs.p, rs.q);
    const double r3 = rs.p.r_curv * rs.p.r_curv * rs.p.r_curv;
    const double cut = hyperboloid::norm_integral_cutoff(st);

    const auto norm = oracle::integrate(
        [&](double tau) {
          const double t = std::max(tau, 1e-12);
          const double v = hyperboloid::quasi_radial_eval(st, t);
          return r3 * std::sinh(tau) * std::sinh(tau) * v * v;
        },
        0.0, cut, 1e-12, 1e-11);
    CHECK(std::fabs(norm.value - 1.0) < 1e-8);

    const int nodes = testutil::sign_changes(
        [&](double tau) { return hyperboloid::quasi_radial_eval(st, tau); }, 0.02, cut);
    CHECK(nodes == (rs.q.n - rs.q.j).as_int() - 1);

    const double res = testutil::ode_residual(
        rs.p, st.d.j_tilde, st.energy,
        [&](double tau) { return hyperboloid::quasi_radial_eval(st, tau); }, 0.02,
        std::min(cut, 30.0));
    CHECK(res < 1e-6);

    // log-slope of sinh^{-jt} R at large tau approaches n - j - 1 - sigma
    const double t0 = 0.7 * cut, dt = 0.05 * cut;
    auto log_stripped = [&](double tau) {
      return std::log(std::fabs(hyperboloid::quasi_radial_eval(st, tau))) -
             st.d.j_tilde * (tau + std::log1p(-std::exp(-2.0 * tau)) - std::log(2.0));
    };
    const double slope = (log_stripped(t0 + dt) - log_stripped(t0)) / dt;
    const double want = (rs.q.n - rs.q.j).value() - 1.0 - st.d.sigma;
    CHECK(slope == doctest::Approx(want).epsilon(1e-3));
  }
}

TEST_CASE("orthogonality in n at fixed channel") {
  const auto p = hyper(30.0);
  for (int n1 = 1; n1 <= 3; ++n1) {
    for (int n2 = n1 + 1; n2 <= 4; ++n2) {
      const auto a = hyperboloid::make_state(p, qn(n1, 0, 0));
      const auto b = hyperboloid::make_state(p, qn(n2, 0, 0));
      const double r3 = p.r_curv * p.r_curv * p.r_curv;
      const double cut = std::max(hyperboloid::norm_integral_cutoff(a),
                                  hyperboloid::norm_integral_cutoff(b));
      const auto r = oracle::integrate(
          [&](double tau) {
            const double t = std::max(tau, 1e-12);
            return r3 * std::sinh(tau) * std::sinh(tau) * hyperboloid::quasi_radial_eval(a, t) *
                   hyperboloid::quasi_radial_eval(b, t);
          },
          0.0, cut, 1e-10);
      CHECK(std::fabs(r.value) < 1e-7);
    }
  }
}

TEST_CASE("oracle confirms the spectrum and the level count") {
  const auto p = hyper(10.0);
  const auto res = oracle::solve_quasi_radial(p, 0.0, 5);
  REQUIRE(res.eigenvalues.size() == 3);
  CHECK(res.truncated);
  CHECK(std::fabs(res.eigenvalues[0] - (-0.4)) < 1e-4);
  CHECK(std::fabs(res.eigenvalues[1] - (-0.04)) < 1e-4);
  CHECK(std::fabs(res.eigenvalues[2] - hyperboloid::hyper_energy(p, qn(3, 0, 0))) < 1e-4);
}
