#pragma once

#include <functional>
#include <vector>

#include "micz/params.hpp"

namespace micz {
namespace oracle {

enum class Exec { Serial, Parallel };

// ---------------------------------------------------------------- quadrature

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  int subdivisions = 0;
  bool converged = false;
};

// Adaptive Gauss-Kronrod (7-15) on [a, b]. Endpoint power-law integrands are
// handled by subdivision. Throws std::runtime_error with the subdivision
// count when the requested tolerance cannot be met.
QuadResult integrate(const std::function<double(double)>& f, double a, double b, double tol_abs,
                     double tol_rel = 0.0, int max_subdiv = 4000);

// --------------------------------------------------------------- eigenproblem

// Generic Sturm-Liouville problem in self-adjoint form
//   (w v')' + w (shift + potential(x)) v = -lambda w v
// on [a, b], cell-centered finite volumes. The weight is supplied as
// log w(x) (-inf where w vanishes) so that steep measures like sinh^{2j+2}
// never overflow; only weight ratios between neighboring cells enter the
// symmetrized matrix. Zero flux is natural wherever the weight vanishes at a
// boundary face; dirichlet_right forces v = 0 at b (domain truncation).
struct SturmLiouvilleProblem {
  std::function<double(double)> log_weight;  // log w(x); -inf at singular faces
  std::function<double(double)> potential;   // regular on (a, b)
  double shift = 0.0;
  double a = 0.0;
  double b = 1.0;
  bool dirichlet_right = false;
};

// Lowest k eigenvalues lambda by Sturm-sequence bisection on the symmetrized
// tridiagonal discretization with n cells.
std::vector<double> sl_eigenvalues(const SturmLiouvilleProblem& prob, int k, int n_cells,
                                   Exec exec = Exec::Parallel);

struct EigenResult {
  std::vector<double> eigenvalues;      // Richardson-extrapolated energies
  std::vector<double> error_estimates;  // |fine - coarse| / 3
  std::vector<int> grid_sizes;
  std::vector<std::vector<double>> per_grid;  // energies per grid, same order
  bool truncated = false;  // hyperboloid: fewer bound levels than requested
};

struct SolveOptions {
  int base_cells = 4000;      // coarse grid; fine grid doubles it
  double domain_max = 0.0;    // 0 = automatic (flat/hyperboloid truncation)
  Exec exec = Exec::Parallel;
};

// Lowest k discrete energies of the quasi-radial problem for the channel with
// effective angular eigenvalue jt(jt+1). Consumes only the geometry module's
// potentials and measures, never the analytic spectra. For the hyperboloid,
// only energies below the continuum threshold are returned.
EigenResult solve_quasi_radial(const PhysParams& p, double j_tilde, int k,
                               const SolveOptions& opt = {});

// Eigenvalues Lambda = jt(jt+1) of the angular operator at fixed phi mode.
EigenResult solve_angular(const PhysParams& p, std::int64_t k_mode, int k,
                          const SolveOptions& opt = {});

// ---------------------------------------------------------------- flat limit

struct LimitReport {
  std::vector<double> radii;
  std::vector<double> diffs;   // |E_curved - E_flat| (hyperboloid: e2/R0 removed)
  std::vector<double> ratios;  // successive diff ratios under radius doubling
};

// Energy convergence of a fixed state toward flat space along a geometric
// radius sequence; ratios approach 4 for 1/R0^2 scaling.
LimitReport limit_study(const PhysParams& base, const QuantumNumbers& q, Geometry which,
                        const std::vector<double>& radii);

}  // namespace oracle
}  // namespace micz
