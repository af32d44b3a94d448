#include "micz/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "micz/angular.hpp"
#include "micz/flat.hpp"
#include "micz/geometry.hpp"
#include "micz/hyperboloid.hpp"
#include "micz/sphere.hpp"

namespace micz {
namespace oracle {

namespace {

constexpr double kPi = std::numbers::pi;

// ------------------------------------------------------------ Gauss-Kronrod

// 15-point Kronrod nodes (positive half) with the embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, err;
  bool operator<(const Panel& o) const { return err < o.err; }
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double hl = 0.5 * (b - a);
  double resk = 0.0, resg = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double fa = f(c - hl * kXgk[i]);
    const double fsum = (i == 7) ? fa : fa + f(c + hl * kXgk[i]);
    resk += kWgk[i] * fsum;
    if (i % 2 == 1) resg += kWg[i / 2] * fsum;  // Gauss nodes sit at odd Kronrod indices
  }
  const double value = resk * hl;
  const double err = std::fabs((resk - resg) * hl);
  return Panel{a, b, value, err};
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b, double tol_abs,
                     double tol_rel, int max_subdiv) {
  std::vector<Panel> panels{gk15(f, a, b)};
  int used = 1;
  double total = panels[0].value;
  double total_err = panels[0].err;
  auto resum = [&] {
    // recompute from scratch: incremental updates can cancel a large panel
    // error against small children and report false convergence
    total = 0.0;
    total_err = 0.0;
    for (const Panel& p : panels) {
      total += p.value;
      total_err += p.err;
    }
  };
  auto tol = [&] { return std::max(tol_abs, tol_rel * std::fabs(total)); };
  while (total_err > tol() && used < max_subdiv) {
    size_t wi = 0;
    for (size_t i = 1; i < panels.size(); ++i)
      if (panels[i].err > panels[wi].err) wi = i;
    const Panel worst = panels[wi];
    const double mid = 0.5 * (worst.a + worst.b);
    panels[wi] = gk15(f, worst.a, mid);
    panels.push_back(gk15(f, mid, worst.b));
    resum();
    ++used;
  }
  QuadResult out{total, total_err, used, total_err <= tol()};
  if (!out.converged) {
    std::ostringstream os;
    os << "quadrature failed to converge: error=" << total_err << " after " << used
       << " subdivisions (tol=" << tol() << ")";
    throw std::runtime_error(os.str());
  }
  return out;
}

// ------------------------------------------------------------- eigen solver

namespace {

struct Tridiag {
  std::vector<double> diag;  // B_ii
  std::vector<double> off2;  // B_{i,i+1}^2
};

Tridiag assemble(const SturmLiouvilleProblem& prob, int n) {
  const double h = (prob.b - prob.a) / n;
  std::vector<double> lw_face(n + 1), lw_cell(n);
  for (int i = 0; i <= n; ++i) lw_face[i] = prob.log_weight(prob.a + h * i);
  for (int i = 0; i < n; ++i) lw_cell[i] = prob.log_weight(prob.a + h * (i + 0.5));

  // Only ratios w_face/w_cell between neighbors enter; those stay O(1) even
  // when the weight itself spans hundreds of orders of magnitude.
  Tridiag t;
  t.diag.resize(n);
  t.off2.resize(n - 1);
  const double h2 = h * h;
  for (int i = 0; i < n; ++i) {
    double lwl = lw_face[i];
    double lwr = lw_face[i + 1];
    if (i == n - 1 && prob.dirichlet_right) lwr += std::log(2.0);  // ghost reflection at b
    const double rl = std::isinf(lwl) ? 0.0 : std::exp(lwl - lw_cell[i]);
    const double rr = std::isinf(lwr) ? 0.0 : std::exp(lwr - lw_cell[i]);
    t.diag[i] = (rl + rr) / h2 - (prob.shift + prob.potential(prob.a + h * (i + 0.5)));
  }
  for (int i = 0; i + 1 < n; ++i) {
    const double e = std::exp(lw_face[i + 1] - 0.5 * (lw_cell[i] + lw_cell[i + 1])) / h2;
    t.off2[i] = e * e;
  }
  return t;
}

// Number of eigenvalues of B strictly below x (Sturm sequence / LDL count).
int count_below(const Tridiag& t, double x) {
  constexpr double pivmin = 1e-290;
  int neg = 0;
  double d = t.diag[0] - x;
  if (d < 0.0) ++neg;
  if (std::fabs(d) < pivmin) d = -pivmin;
  for (size_t i = 1; i < t.diag.size(); ++i) {
    d = (t.diag[i] - x) - t.off2[i - 1] / d;
    if (d < 0.0) ++neg;
    if (std::fabs(d) < pivmin) d = -pivmin;
  }
  return neg;
}

double bisect_index(const Tridiag& t, int idx, double lo, double hi) {
  // Invariant: count(lo) <= idx < count(hi). The stop test must track the
  // shrinking bracket, not the Gershgorin scale, which grows like 1/h^2.
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (hi - lo <= 4e-16 * std::max(std::fabs(lo), std::fabs(hi)) + 1e-300) break;
    if (count_below(t, mid) > idx)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> sl_eigenvalues(const SturmLiouvilleProblem& prob, int k, int n_cells,
                                   Exec exec) {
  if (k < 1 || n_cells < 8) throw std::invalid_argument("sl_eigenvalues: bad k or grid");
  const Tridiag t = assemble(prob, n_cells);
  const int n = int(t.diag.size());

  double lo = t.diag[0], hi = t.diag[0];
  for (int i = 0; i < n; ++i) {
    const double el = i > 0 ? std::sqrt(t.off2[i - 1]) : 0.0;
    const double er = i + 1 < n ? std::sqrt(t.off2[i]) : 0.0;
    lo = std::min(lo, t.diag[i] - el - er);
    hi = std::max(hi, t.diag[i] + el + er);
  }

  std::vector<double> out(std::min<int>(k, n));
  if (exec == Exec::Parallel) {
#ifdef MICZ_HAVE_OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int idx = 0; idx < int(out.size()); ++idx) out[idx] = bisect_index(t, idx, lo, hi);
  } else {
    for (int idx = 0; idx < int(out.size()); ++idx) out[idx] = bisect_index(t, idx, lo, hi);
  }
  return out;
}

namespace {

SturmLiouvilleProblem radial_problem(const PhysParams& p, double j_tilde) {
  // Exponent ansatz R = S^{jt} v removes the jt(jt+1)/S^2 singular term and
  // folds it into the weight S^{2jt+2} plus a constant shift.
  SturmLiouvilleProblem prob;
  const double jt = j_tilde;
  prob.log_weight = [p, jt](double x) {
    const double s = geometry::metric_s(p, x);
    return s <= 0.0 ? -std::numeric_limits<double>::infinity()
                    : (2.0 * jt + 2.0) * std::log(s);
  };
  prob.potential = [p](double x) { return geometry::coulomb_term(p, x); };
  prob.shift = geometry::metric_s_curvature(p) * jt * (jt + 2.0);
  return prob;
}

std::vector<double> lambdas_to_energies(const PhysParams& p, const std::vector<double>& ls) {
  std::vector<double> out(ls.size());
  const double scale = geometry::energy_scale(p);
  const double off = geometry::energy_offset(p);
  for (size_t i = 0; i < ls.size(); ++i) out[i] = ls[i] / scale + off;
  return out;
}

}  // namespace

EigenResult solve_quasi_radial(const PhysParams& p, double j_tilde, int k,
                               const SolveOptions& opt) {
  SturmLiouvilleProblem prob = radial_problem(p, j_tilde);
  prob.a = 0.0;

  int request = k;
  double lambda_cut = 0.0;  // hyperboloid: keep only below-threshold levels
  bool filter = false;

  switch (p.geometry) {
    case Geometry::Sphere:
      prob.b = kPi;
      break;
    case Geometry::Flat: {
      const double nu_top = j_tilde + k + 1.0;
      const double r0 = p.bohr_radius();
      prob.b = opt.domain_max > 0.0 ? opt.domain_max : r0 * (3.0 * nu_top * nu_top + 40.0);
      prob.dirichlet_right = true;
      break;
    }
    case Geometry::Hyperboloid: {
      filter = true;
      const double e_cont = hyperboloid::continuum_threshold(p);
      lambda_cut = geometry::energy_scale(p) * (e_cont - geometry::energy_offset(p));
      prob.dirichlet_right = true;
      // A couple extra levels so box-continuum states do not mask bound ones.
      request = k + 2;
      if (opt.domain_max > 0.0) {
        prob.b = opt.domain_max;
      } else {
        // Bound eigenfunctions decay like exp(-sqrt(lambda_cut - lambda) tau)
        // in the symmetrized measure. Size the box from the slowest computed
        // rate, iterating since the near-threshold levels set it.
        double box = 12.0;
        for (int round = 0; round < 3; ++round) {
          prob.b = box;
          auto ls = sl_eigenvalues(prob, request, opt.base_cells, opt.exec);
          const double margin = 0.25 * (kPi / box) * (kPi / box);
          double slowest = -1.0;
          for (double l : ls)
            if (l < lambda_cut - margin) slowest = std::sqrt(lambda_cut - l);
          if (slowest <= 0.0) break;  // no bound levels resolved
          const double wanted = std::clamp(20.0 / slowest + 10.0, 12.0, 2000.0);
          if (wanted <= box * 1.05) break;
          box = wanted;
        }
        prob.b = box;
      }
      break;
    }
  }

  EigenResult res;
  res.grid_sizes = {opt.base_cells, 2 * opt.base_cells};
  auto coarse = sl_eigenvalues(prob, request, opt.base_cells, opt.exec);
  auto fine = sl_eigenvalues(prob, request, 2 * opt.base_cells, opt.exec);

  const size_t count = std::min(coarse.size(), fine.size());
  std::vector<double> extrap(count), errs(count);
  for (size_t i = 0; i < count; ++i) {
    extrap[i] = (4.0 * fine[i] - coarse[i]) / 3.0;
    errs[i] = std::fabs(fine[i] - coarse[i]) / 3.0;
  }

  if (filter) {
    const double margin = 0.25 * (kPi / prob.b) * (kPi / prob.b);
    std::vector<double> le, ee, lc, lf;
    for (size_t i = 0; i < count; ++i) {
      if (extrap[i] < lambda_cut - margin && int(le.size()) < k) {
        le.push_back(extrap[i]);
        ee.push_back(errs[i]);
        lc.push_back(coarse[i]);
        lf.push_back(fine[i]);
      }
    }
    res.truncated = int(le.size()) < k;
    res.eigenvalues = lambdas_to_energies(p, le);
    res.per_grid = {lambdas_to_energies(p, lc), lambdas_to_energies(p, lf)};
    const double scale = geometry::energy_scale(p);
    for (double& e : ee) e /= scale;
    res.error_estimates = std::move(ee);
    return res;
  }

  res.eigenvalues = lambdas_to_energies(p, extrap);
  res.per_grid = {lambdas_to_energies(p, coarse), lambdas_to_energies(p, fine)};
  res.error_estimates.resize(count);
  const double scale = geometry::energy_scale(p);
  for (size_t i = 0; i < count; ++i) res.error_estimates[i] = errs[i] / scale;
  return res;
}

EigenResult solve_angular(const PhysParams& p, std::int64_t k_mode, int k,
                          const SolveOptions& opt) {
  const double m1 = std::sqrt(angular::m1_squared(p, k_mode));
  const double m2 = std::sqrt(angular::m2_squared(p, k_mode));
  const double mbar = 0.5 * (m1 + m2);

  SturmLiouvilleProblem prob;
  prob.a = 0.0;
  prob.b = kPi;
  prob.log_weight = [m1, m2](double th) {
    const double c = std::cos(0.5 * th);
    const double s = std::sin(0.5 * th);
    const double st = std::sin(th);
    if (s <= 0.0 || c <= 0.0 || st <= 0.0) return -std::numeric_limits<double>::infinity();
    return std::log(st) + 2.0 * m1 * std::log(c) + 2.0 * m2 * std::log(s);
  };
  prob.potential = [](double) { return 0.0; };
  prob.shift = -mbar * (mbar + 1.0);

  EigenResult res;
  res.grid_sizes = {opt.base_cells, 2 * opt.base_cells};
  auto coarse = sl_eigenvalues(prob, k, opt.base_cells, opt.exec);
  auto fine = sl_eigenvalues(prob, k, 2 * opt.base_cells, opt.exec);
  res.per_grid = {coarse, fine};
  res.eigenvalues.resize(coarse.size());
  res.error_estimates.resize(coarse.size());
  for (size_t i = 0; i < coarse.size(); ++i) {
    res.eigenvalues[i] = (4.0 * fine[i] - coarse[i]) / 3.0;
    res.error_estimates[i] = std::fabs(fine[i] - coarse[i]) / 3.0;
  }
  return res;
}

LimitReport limit_study(const PhysParams& base, const QuantumNumbers& q, Geometry which,
                        const std::vector<double>& radii) {
  if (which == Geometry::Flat) throw std::invalid_argument("limit_study: pick a curved geometry");
  LimitReport rep;
  rep.radii = radii;
  const double e_flat = flat::flat_energy(base, q);
  for (double r : radii) {
    PhysParams pc = base;
    pc.geometry = which;
    pc.r_curv = r;
    double e = which == Geometry::Sphere ? sphere::sphere_energy(pc, q)
                                         : hyperboloid::hyper_energy(pc, q) - pc.e2 / r;
    rep.diffs.push_back(std::fabs(e - e_flat));
  }
  for (size_t i = 0; i + 1 < rep.diffs.size(); ++i)
    rep.ratios.push_back(rep.diffs[i] / rep.diffs[i + 1]);
  return rep;
}

}  // namespace oracle
}  // namespace micz
