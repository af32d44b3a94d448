// Command-line surface: spectrum tables, wavefunction samples and
// verification suites, emitted as deterministic CSV or JSON.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid configuration or
// state, 3 numeric instability.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "micz/angular.hpp"
#include "micz/flat.hpp"
#include "micz/geometry.hpp"
#include "micz/hyperboloid.hpp"
#include "micz/oracle.hpp"
#include "micz/specfun.hpp"
#include "micz/sphere.hpp"

using json = nlohmann::ordered_json;
using namespace micz;
constexpr double kPi = std::numbers::pi;
constexpr const char* kVersion = "1.0.0";

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct CommonOpts {
  std::string geometry = "flat";
  double mu = 1.0, hbar = 1.0, e2 = 1.0;
  double lambda1 = 0.0, lambda2 = 0.0;
  std::string s = "0";
  double radius = 1.0;
  std::string format = "csv";
  std::string output;  // empty = stdout
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--geometry", o.geometry, "flat|sphere|hyperboloid")
      ->check(CLI::IsMember({"flat", "sphere", "hyperboloid"}));
  cmd->add_option("--mu", o.mu, "particle mass");
  cmd->add_option("--hbar", o.hbar, "action quantum");
  cmd->add_option("--e2", o.e2, "Coulomb coupling e^2");
  cmd->add_option("--lambda1", o.lambda1, "axial coupling lambda_1");
  cmd->add_option("--lambda2", o.lambda2, "axial coupling lambda_2");
  cmd->add_option("--s", o.s, "monopole number (half-integer, e.g. 1/2 or 0.5)");
  cmd->add_option("--radius", o.radius, "curvature radius R0");
  cmd->add_option("--format", o.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output", o.output, "output file (default stdout)");
}

PhysParams to_params(const CommonOpts& o) {
  PhysParams p;
  p.mu = o.mu;
  p.hbar = o.hbar;
  p.e2 = o.e2;
  p.lambda1 = o.lambda1;
  p.lambda2 = o.lambda2;
  p.r_curv = o.radius;
  if (o.geometry == "sphere")
    p.geometry = Geometry::Sphere;
  else if (o.geometry == "hyperboloid")
    p.geometry = Geometry::Hyperboloid;
  const auto s = parse_half_int(o.s);
  if (!s) throw ValidationError({"s is not a half-integer: " + o.s});
  p.s = *s;
  if (!(p.mu > 0.0) || !(p.hbar > 0.0) || p.e2 < 0.0 || p.lambda1 < 0.0 || p.lambda2 < 0.0 ||
      !(p.r_curv > 0.0))
    throw ValidationError({"parameters violate positivity constraints"});
  return p;
}

HalfInt parse_qn(const std::string& text, const char* name) {
  const auto v = parse_half_int(text);
  if (!v) throw ValidationError({std::string(name) + " is not a half-integer: " + text});
  return *v;
}

json config_echo(const CommonOpts& o, const std::string& subcommand) {
  json cfg;
  cfg["tool"] = "micz";
  cfg["version"] = kVersion;
  cfg["subcommand"] = subcommand;
  cfg["geometry"] = o.geometry;
  cfg["mu"] = o.mu;
  cfg["hbar"] = o.hbar;
  cfg["e2"] = o.e2;
  cfg["lambda1"] = o.lambda1;
  cfg["lambda2"] = o.lambda2;
  cfg["s"] = o.s;
  cfg["radius"] = o.radius;
  cfg["format"] = o.format;
  return cfg;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << text;
  }
}

std::string csv_table(const json& cfg, const std::vector<std::string>& columns,
                      const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  for (auto it = cfg.begin(); it != cfg.end(); ++it)
    os << "# " << it.key() << "=" << (it->is_string() ? it->get<std::string>() : it->dump())
       << "\n";
  for (size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
  os << "\n";
  for (const auto& r : rows) {
    for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << "\n";
  }
  return os.str();
}

std::string json_table(const json& cfg, const std::vector<std::string>& columns,
                       const std::vector<std::vector<std::string>>& rows) {
  json out;
  out["config"] = cfg;
  out["columns"] = columns;
  json jrows = json::array();
  for (const auto& r : rows) jrows.push_back(r);
  out["rows"] = jrows;
  return out.dump(2) + "\n";
}

// ------------------------------------------------------------------ spectrum

struct SpectrumOpts {
  CommonOpts common;
  std::string n_max = "4";
  std::string n, j, m;  // optional exact selectors
};

double state_energy(const PhysParams& p, const QuantumNumbers& q) {
  switch (p.geometry) {
    case Geometry::Sphere:
      return sphere::sphere_energy(p, q);
    case Geometry::Hyperboloid:
      return hyperboloid::hyper_energy(p, q);
    default:
      return flat::flat_energy(p, q);
  }
}

int cmd_spectrum(const SpectrumOpts& o) {
  const PhysParams p = to_params(o.common);
  const HalfInt n_max = parse_qn(o.n_max, "n-max");
  std::optional<HalfInt> sel_n, sel_j, sel_m;
  if (!o.n.empty()) sel_n = parse_qn(o.n, "n");
  if (!o.j.empty()) sel_j = parse_qn(o.j, "j");
  if (!o.m.empty()) sel_m = parse_qn(o.m, "m");

  struct Row {
    double energy;
    QuantumNumbers q;
    DerivedNotation d;
    bool bracket;
  };
  std::vector<Row> rows;
  for (const auto& q : enumerate_states(p, n_max)) {
    if ((sel_n && q.n != *sel_n) || (sel_j && q.j != *sel_j) || (sel_m && q.m != *sel_m)) continue;
    if (!validate(p, q).empty()) continue;  // hyperboloid: drops unbound states
    const auto d = derive_notation(p, q);
    bool bracket = true;
    if (p.geometry == Geometry::Hyperboloid) {
      const double ratio = p.r_curv / p.bohr_radius();
      bracket = q.n.value() <= std::floor(ratio / (q.n.value() + d.delta) - d.delta - 1.0);
    }
    rows.push_back({state_energy(p, q), q, d, bracket});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.energy != b.energy) return a.energy < b.energy;
    if (a.q.n != b.q.n) return a.q.n < b.q.n;
    if (a.q.j != b.q.j) return a.q.j < b.q.j;
    return a.q.m < b.q.m;
  });

  std::vector<std::string> columns{"n", "j", "m", "delta", "j_tilde", "energy"};
  columns.push_back(p.geometry == Geometry::Flat ? "kappa" : "sigma");
  columns.push_back("bound");
  if (p.geometry == Geometry::Hyperboloid) columns.push_back("bound_bracket_criterion");

  std::vector<std::vector<std::string>> table;
  for (const auto& r : rows) {
    std::vector<std::string> row{to_string(r.q.n),   to_string(r.q.j), to_string(r.q.m),
                                 fmt17(r.d.delta),   fmt17(r.d.j_tilde),
                                 fmt17(r.energy)};
    row.push_back(fmt17(p.geometry == Geometry::Flat ? r.d.kappa : r.d.sigma));
    row.push_back("true");
    if (p.geometry == Geometry::Hyperboloid) row.push_back(r.bracket ? "true" : "false");
    table.push_back(std::move(row));
  }

  const json cfg = config_echo(o.common, "spectrum");
  emit(o.common.format == "json" ? json_table(cfg, columns, table)
                                 : csv_table(cfg, columns, table),
       o.common.output);
  return 0;
}

// -------------------------------------------------------------- wavefunction

struct WaveOpts {
  CommonOpts common;
  std::string n = "1", j = "0", m = "0";
  double grid_min = -1.0, grid_max = -1.0;
  int grid_points = 50;
  double theta = kPi / 3.0, phi = 0.0;
};

int cmd_wavefunction(const WaveOpts& o) {
  const PhysParams p = to_params(o.common);
  const QuantumNumbers q{parse_qn(o.n, "n"), parse_qn(o.j, "j"), parse_qn(o.m, "m")};
  const auto violations = validate(p, q);
  if (!violations.empty()) throw ValidationError(violations);
  if (o.grid_points < 2) throw ValidationError({"grid-points must be at least 2"});
  const auto ast = angular::make_angular_state(p, q);

  std::function<double(double)> radial;
  double lo = o.grid_min, hi = o.grid_max;
  switch (p.geometry) {
    case Geometry::Flat: {
      const auto st = flat::make_state(p, q);
      if (lo < 0.0) lo = 0.02 / st.d.kappa;
      if (hi < 0.0) hi = 20.0 / st.d.kappa;
      radial = [st](double r) { return flat::radial_eval(st, r); };
      break;
    }
    case Geometry::Sphere: {
      const auto st = sphere::make_state(p, q);
      if (lo < 0.0) lo = 0.02;
      if (hi < 0.0) hi = kPi - 0.02;
      radial = [st](double chi) { return sphere::quasi_radial_eval(st, chi); };
      break;
    }
    case Geometry::Hyperboloid: {
      const auto st = hyperboloid::make_state(p, q);
      if (lo < 0.0) lo = 0.02;
      if (hi < 0.0) hi = hyperboloid::norm_integral_cutoff(st) * 0.5;
      radial = [st](double tau) { return hyperboloid::quasi_radial_eval(st, tau); };
      break;
    }
  }

  json cfg = config_echo(o.common, "wavefunction");
  cfg["n"] = o.n;
  cfg["j"] = o.j;
  cfg["m"] = o.m;
  cfg["theta"] = o.theta;
  cfg["phi"] = o.phi;
  cfg["grid_min"] = lo;
  cfg["grid_max"] = hi;
  cfg["grid_points"] = o.grid_points;
  cfg["m1"] = ast.d.m1;
  cfg["m2"] = ast.d.m2;
  cfg["delta"] = ast.d.delta;
  cfg["j_tilde"] = ast.d.j_tilde;
  cfg["energy"] = state_energy(p, q);
  if (p.geometry == Geometry::Flat)
    cfg["kappa"] = ast.d.kappa;
  else
    cfg["sigma"] = ast.d.sigma;

  const std::complex<double> z = angular::z_eval(ast, o.theta, o.phi);
  std::vector<std::string> columns{"coordinate", "R", "Z_re", "Z_im", "psi_re", "psi_im"};
  std::vector<std::vector<std::string>> table;
  for (int i = 0; i < o.grid_points; ++i) {
    const double x = lo + (hi - lo) * i / (o.grid_points - 1);
    const double r = radial(x);
    const std::complex<double> psi = r * z;
    table.push_back({fmt17(x), fmt17(r), fmt17(z.real()), fmt17(z.imag()), fmt17(psi.real()),
                     fmt17(psi.imag())});
  }
  emit(o.common.format == "json" ? json_table(cfg, columns, table)
                                 : csv_table(cfg, columns, table),
       o.common.output);
  return 0;
}

// -------------------------------------------------------------------- verify

struct VerifyOpts {
  CommonOpts common;
  std::string suite;
  bool geometry_given = false;
};

struct VerifyReport {
  int checked = 0;
  int failed = 0;
  std::ostringstream out;

  void record(const std::string& name, double err, double tol) {
    ++checked;
    const bool ok = err <= tol;
    if (!ok) ++failed;
    out << (ok ? "ok   " : "FAIL ") << name << "  err=" << fmt17(err) << "  tol=" << fmt17(tol)
        << "\n";
  }
  void record_bool(const std::string& name, bool ok) {
    ++checked;
    if (!ok) ++failed;
    out << (ok ? "ok   " : "FAIL ") << name << "\n";
  }
};

double tol_scale() {
  const char* env = std::getenv("MICZ_TOL_OVERRIDE");
  if (!env) return 1.0;
  const double v = std::atof(env);
  return v > 0.0 ? v : 1.0;
}

QuantumNumbers qn_int(int n, int j, int m) {
  return {HalfInt::from_int(n), HalfInt::from_int(j), HalfInt::from_int(m)};
}

// Random valid state with n <= 6; mirrors the scheme used by the unit tests
// but lives here so the binary has no test-code dependency.
std::pair<PhysParams, QuantumNumbers> testutil_random(std::mt19937& rng, Geometry g) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  PhysParams p;
  p.geometry = g;
  p.s = HalfInt{std::int64_t(rng() % 5) - 2};
  if (unif(rng) < 0.7) {
    p.lambda1 = unif(rng);
    p.lambda2 = unif(rng);
  }
  const std::int64_t k = std::int64_t(rng() % 5) - 2;
  const HalfInt m = p.s + HalfInt::from_int(k);
  const HalfInt mp = m_plus_of(m, p.s);
  const HalfInt s_abs = p.s.abs();
  const int t_lo = std::max<std::int64_t>(1, (mp - s_abs).twice / 2 + 1);
  const int t_hi = std::max(t_lo, int(std::floor(6.0 - s_abs.value())));
  const int t = t_lo + int(rng() % std::uint32_t(t_hi - t_lo + 1));
  const HalfInt n = s_abs + HalfInt::from_int(t);
  const int j_span = int((n - HalfInt::from_int(1) - mp).twice / 2);
  const HalfInt j = mp + HalfInt::from_int(int(rng() % std::uint32_t(j_span + 1)));
  if (g == Geometry::Sphere) {
    p.r_curv = 0.5 + 4.5 * unif(rng);
  } else if (g == Geometry::Hyperboloid) {
    const double nd = n.value() + delta_of(p, m);
    p.r_curv = p.bohr_radius() * (nd * nd + 1.0 + 10.0 * unif(rng));
  }
  return {p, {n, j, m}};
}

void verify_reductions(VerifyReport& rep, double ts) {
  for (int n = 1; n <= 6; ++n) {
    PhysParams p;
    const double coul = -0.5 / (double(n) * n);
    rep.record("reduction flat n=" + std::to_string(n),
               std::fabs(flat::flat_energy(p, qn_int(n, n - 1, 0)) - coul), 4e-16 * ts);
    PhysParams ps = p;
    ps.geometry = Geometry::Sphere;
    ps.r_curv = 2.0;
    const double es = (double(n) * n - 1.0) / 8.0 + coul;
    rep.record("reduction sphere n=" + std::to_string(n),
               std::fabs(sphere::sphere_energy(ps, qn_int(n, n - 1, 0)) - es),
               4e-16 * std::max(1.0, std::fabs(es)) * ts);
    PhysParams ph = p;
    ph.geometry = Geometry::Hyperboloid;
    ph.r_curv = 64.0;
    const double eh = -(double(n) * n - 1.0) / (2.0 * 64.0 * 64.0) + coul + 1.0 / 64.0;
    rep.record("reduction hyperboloid n=" + std::to_string(n),
               std::fabs(hyperboloid::hyper_energy(ph, qn_int(n, n - 1, 0)) - eh), 4e-16 * ts);
  }
}

void verify_normalization(VerifyReport& rep, double ts, const std::string& geom) {
  std::mt19937 rng(97531);
  if (geom.empty() || geom == "flat") {
    for (int it = 0; it < 10; ++it) {
      const auto rs = testutil_random(rng, Geometry::Flat);
      const auto st = flat::make_state(rs.first, rs.second);
      const auto r = oracle::integrate(
          [&](double x) {
            const double v = flat::radial_eval(st, std::max(x, 1e-12));
            return v * v * x * x;
          },
          0.0, (40.0 + 10.0 * st.d.j_tilde) / st.d.kappa, 1e-12, 1e-11);
      rep.record("norm flat #" + std::to_string(it), std::fabs(r.value - 1.0), 1e-8 * ts);
    }
  }
  if (geom.empty() || geom == "sphere") {
    for (int it = 0; it < 10; ++it) {
      const auto rs = testutil_random(rng, Geometry::Sphere);
      const auto st = sphere::make_state(rs.first, rs.second);
      const double r3 = std::pow(rs.first.r_curv, 3.0);
      const auto r = oracle::integrate(
          [&](double chi) {
            const double x = std::min(std::max(chi, 1e-12), kPi - 1e-12);
            const double v = sphere::quasi_radial_eval(st, x);
            return r3 * std::sin(chi) * std::sin(chi) * v * v;
          },
          0.0, kPi, 1e-12, 1e-11);
      rep.record("norm sphere #" + std::to_string(it), std::fabs(r.value - 1.0), 1e-8 * ts);
    }
  }
  if (geom.empty() || geom == "hyperboloid") {
    for (int it = 0; it < 10; ++it) {
      const auto rs = testutil_random(rng, Geometry::Hyperboloid);
      const auto st = hyperboloid::make_state(rs.first, rs.second);
      const double r3 = std::pow(rs.first.r_curv, 3.0);
      const auto r = oracle::integrate(
          [&](double tau) {
            const double t = std::max(tau, 1e-12);
            const double v = hyperboloid::quasi_radial_eval(st, t);
            return r3 * std::sinh(tau) * std::sinh(tau) * v * v;
          },
          0.0, hyperboloid::norm_integral_cutoff(st), 1e-12, 1e-11);
      rep.record("norm hyperboloid #" + std::to_string(it), std::fabs(r.value - 1.0), 1e-8 * ts);
    }
  }
}

void verify_orthogonality(VerifyReport& rep, double ts, const std::string& geom) {
  if (geom.empty() || geom == "sphere") {
    PhysParams p;
    p.geometry = Geometry::Sphere;
    p.r_curv = 1.7;
    const double r3 = std::pow(p.r_curv, 3.0);
    for (int n1 = 1; n1 <= 3; ++n1)
      for (int n2 = n1 + 1; n2 <= 4; ++n2) {
        const auto a = sphere::make_state(p, qn_int(n1, 0, 0));
        const auto b = sphere::make_state(p, qn_int(n2, 0, 0));
        const auto r = oracle::integrate(
            [&](double chi) {
              const double x = std::min(std::max(chi, 1e-12), kPi - 1e-12);
              return r3 * std::sin(chi) * std::sin(chi) * sphere::quasi_radial_eval(a, x) *
                     sphere::quasi_radial_eval(b, x);
            },
            0.0, kPi, 1e-10);
        rep.record("orthogonality sphere n=" + std::to_string(n1) + "," + std::to_string(n2),
                   std::fabs(r.value), 1e-7 * ts);
      }
  }
  if (geom.empty() || geom == "hyperboloid") {
    PhysParams p;
    p.geometry = Geometry::Hyperboloid;
    p.r_curv = 30.0;
    const double r3 = std::pow(p.r_curv, 3.0);
    for (int n1 = 1; n1 <= 2; ++n1)
      for (int n2 = n1 + 1; n2 <= 3; ++n2) {
        const auto a = hyperboloid::make_state(p, qn_int(n1, 0, 0));
        const auto b = hyperboloid::make_state(p, qn_int(n2, 0, 0));
        const double cut = std::max(hyperboloid::norm_integral_cutoff(a),
                                    hyperboloid::norm_integral_cutoff(b));
        const auto r = oracle::integrate(
            [&](double tau) {
              const double t = std::max(tau, 1e-12);
              return r3 * std::sinh(tau) * std::sinh(tau) *
                     hyperboloid::quasi_radial_eval(a, t) * hyperboloid::quasi_radial_eval(b, t);
            },
            0.0, cut, 1e-10);
        rep.record("orthogonality hyperboloid n=" + std::to_string(n1) + "," + std::to_string(n2),
                   std::fabs(r.value), 1e-7 * ts);
      }
  }
  if (geom.empty() || geom == "flat") {
    PhysParams p;
    p.s = HalfInt::half();
    p.lambda1 = 0.4;
    const HalfInt m = HalfInt::half();
    for (int dj1 = 0; dj1 <= 2; ++dj1)
      for (int dj2 = dj1 + 1; dj2 <= 3; ++dj2) {
        const HalfInt j1 = m_plus_of(m, p.s) + HalfInt::from_int(dj1);
        const HalfInt j2 = m_plus_of(m, p.s) + HalfInt::from_int(dj2);
        const auto a = angular::make_angular_state(p, {j1 + HalfInt::from_int(1), j1, m});
        const auto b = angular::make_angular_state(p, {j2 + HalfInt::from_int(1), j2, m});
        const auto r = oracle::integrate(
            [&](double th) {
              return 2.0 * kPi *
                     (std::conj(angular::z_eval(a, th, 0.0)) * angular::z_eval(b, th, 0.0))
                         .real() *
                     std::sin(th);
            },
            1e-10, kPi - 1e-10, 1e-10);
        rep.record("orthogonality angular j=" + to_string(j1) + "," + to_string(j2),
                   std::fabs(r.value), 1e-8 * ts);
      }
  }
}

// 6th-order-stencil relative L2 residual of the quasi-radial equation.
double ode_residual_l2(const PhysParams& p, double jt, double energy,
                       const std::function<double(double)>& radial, double a, double b) {
  namespace geo = micz::geometry;
  const int n_nodes = 5000;
  const double h = (b - a) / (n_nodes - 1);
  std::vector<double> f(n_nodes);
  for (int i = 0; i < n_nodes; ++i) f[i] = radial(a + h * i);
  const double scale = geo::energy_scale(p);
  const double off = geo::energy_offset(p);
  const int curv = geo::metric_s_curvature(p);
  double num = 0.0, den = 0.0;
  for (int i = 3; i + 3 < n_nodes; ++i) {
    const double x = a + h * i;
    const double slope =
        curv == 0 ? 1.0 / x : (curv < 0 ? 1.0 / std::tan(x) : 1.0 / std::tanh(x));
    const double s_val = geo::metric_s(p, x);
    const double d1 = (-f[i - 3] + 9 * f[i - 2] - 45 * f[i - 1] + 45 * f[i + 1] - 9 * f[i + 2] +
                       f[i + 3]) /
                      (60.0 * h);
    const double d2 = (2 * f[i - 3] - 27 * f[i - 2] + 270 * f[i - 1] - 490 * f[i] +
                       270 * f[i + 1] - 27 * f[i + 2] + 2 * f[i + 3]) /
                      (180.0 * h * h);
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

void verify_ode_residual(VerifyReport& rep, double ts, const std::string& geom) {
  std::mt19937 rng(86420);
  if (geom.empty() || geom == "flat") {
    for (int it = 0; it < 6; ++it) {
      const auto rs = testutil_random(rng, Geometry::Flat);
      const auto st = flat::make_state(rs.first, rs.second);
      const double r = ode_residual_l2(
          rs.first, st.d.j_tilde, st.energy, [&](double x) { return flat::radial_eval(st, x); },
          0.05 / st.d.kappa, 40.0 / st.d.kappa);
      rep.record("ode-residual flat #" + std::to_string(it), r, 1e-6 * ts);
    }
  }
  if (geom.empty() || geom == "sphere") {
    for (int it = 0; it < 6; ++it) {
      const auto rs = testutil_random(rng, Geometry::Sphere);
      const auto st = sphere::make_state(rs.first, rs.second);
      const double r = ode_residual_l2(
          rs.first, st.d.j_tilde, st.energy,
          [&](double x) { return sphere::quasi_radial_eval(st, x); }, 0.02, kPi - 0.02);
      rep.record("ode-residual sphere #" + std::to_string(it), r, 1e-6 * ts);
    }
  }
  if (geom.empty() || geom == "hyperboloid") {
    for (int it = 0; it < 6; ++it) {
      const auto rs = testutil_random(rng, Geometry::Hyperboloid);
      const auto st = hyperboloid::make_state(rs.first, rs.second);
      const double cut = std::min(hyperboloid::norm_integral_cutoff(st), 30.0);
      const double r = ode_residual_l2(
          rs.first, st.d.j_tilde, st.energy,
          [&](double x) { return hyperboloid::quasi_radial_eval(st, x); }, 0.02, cut);
      rep.record("ode-residual hyperboloid #" + std::to_string(it), r, 1e-6 * ts);
    }
  }
}

void verify_oracle(VerifyReport& rep, double ts, const std::string& geom) {
  if (geom.empty() || geom == "flat") {
    PhysParams p;
    const auto res = oracle::solve_quasi_radial(p, 0.0, 2);
    rep.record("oracle flat level 1", std::fabs(res.eigenvalues[0] + 0.5), 1e-6 * ts);
    rep.record("oracle flat level 2", std::fabs(res.eigenvalues[1] + 0.125), 1e-6 * ts);
  }
  if (geom.empty() || geom == "sphere") {
    PhysParams p;
    p.geometry = Geometry::Sphere;
    p.r_curv = 1.0;
    p.s = HalfInt::half();
    p.lambda1 = 0.75;
    const HalfInt m = HalfInt::half();
    const HalfInt j = m_plus_of(m, p.s);
    const double jt = j.value() + delta_of(p, m);
    const auto res = oracle::solve_quasi_radial(p, jt, 3);
    for (int i = 0; i < 3; ++i) {
      const HalfInt n = j + HalfInt::from_int(i + 1);
      const double want = sphere::sphere_energy(p, {n, j, m});
      rep.record("oracle sphere level " + std::to_string(i + 1),
                 std::fabs(res.eigenvalues[i] - want), 1e-6 * ts);
    }
  }
  if (geom.empty() || geom == "hyperboloid") {
    PhysParams p;
    p.geometry = Geometry::Hyperboloid;
    p.r_curv = 10.0;
    oracle::SolveOptions so;
    so.base_cells = 12000;
    const auto res = oracle::solve_quasi_radial(p, 0.0, 5, so);
    rep.record_bool("oracle hyperboloid level count == 3", res.eigenvalues.size() == 3);
    for (size_t i = 0; i < res.eigenvalues.size(); ++i) {
      const double want = hyperboloid::hyper_energy(p, qn_int(int(i) + 1, 0, 0));
      rep.record("oracle hyperboloid level " + std::to_string(i + 1),
                 std::fabs(res.eigenvalues[i] - want), 1e-6 * ts);
    }
  }
}

void verify_limits(VerifyReport& rep, double ts) {
  const std::vector<double> radii{10.0, 20.0, 40.0, 80.0};
  PhysParams p;
  const auto r = oracle::limit_study(p, qn_int(2, 0, 0), Geometry::Sphere, radii);
  for (size_t i = 0; i < radii.size(); ++i) {
    const double want = 1.5 / (radii[i] * radii[i]);
    rep.record("limit sphere n=2 R0=" + fmt17(radii[i]), std::fabs(r.diffs[i] - want) / want,
               1e-10 * ts);
  }
  PhysParams pg;
  pg.s = HalfInt::half();
  pg.lambda1 = 0.75;
  const QuantumNumbers qg{HalfInt{5}, HalfInt{1}, HalfInt{1}};
  // (n + delta)^2 ~ 11.3 for this state: start the hyperboloid sweep past it
  const std::vector<double> radii_h{20.0, 40.0, 80.0, 160.0};
  for (Geometry g : {Geometry::Sphere, Geometry::Hyperboloid}) {
    const auto rg =
        oracle::limit_study(pg, qg, g, g == Geometry::Hyperboloid ? radii_h : radii);
    for (size_t i = 0; i < rg.ratios.size(); ++i)
      rep.record("limit ratio " + std::string(g == Geometry::Sphere ? "sphere" : "hyperboloid") +
                     " step " + std::to_string(i),
                 std::fabs(rg.ratios[i] - 4.0), 0.2 * ts);
  }
}

void verify_identities(VerifyReport& rep, double ts) {
  using namespace micz::specfun;
  std::mt19937 rng(13579);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  double worst = 0.0;
  for (int it = 0; it < 100; ++it) {
    double alpha, beta;
    for (;;) {
      alpha = 0.2 + 3.8 * unif(rng);
      beta = -4.0 + 8.0 * unif(rng);
      const double a1 = 1.0 + 0.5 * (alpha + beta), a2 = 1.0 + 0.5 * (alpha - beta);
      auto pole_dist = [](double x) { return x > 0.5 ? 1.0 : std::fabs(x - std::round(x)); };
      if (pole_dist(a1) > 0.1 && pole_dist(a2) > 0.1) break;
    }
    const auto closed = sine_power_integral(alpha, beta);
    const auto re = oracle::integrate(
        [&](double t) { return std::pow(std::sin(t), alpha) * std::cos(beta * t); }, 0.0, kPi,
        1e-13, 1e-13);
    const auto im = oracle::integrate(
        [&](double t) { return std::pow(std::sin(t), alpha) * std::sin(beta * t); }, 0.0, kPi,
        1e-13, 1e-13);
    worst = std::max(worst, std::abs(closed - std::complex<double>(re.value, im.value)) /
                                std::abs(closed));
  }
  rep.record("identity sine-power integral (100 draws)", worst, 1e-11 * ts);

  worst = 0.0;
  for (int it = 0; it < 100; ++it) {
    using Cx = std::complex<double>;
    const std::int64_t N = 1 + std::int64_t(rng() % 6);
    const Cx a(2.0 * unif(rng) - 1.0, unif(rng));
    const Cx ap(2.0 * unif(rng) - 1.0, unif(rng));
    const Cx b(2.5 + unif(rng), unif(rng));
    const Cx bp(3.0 + unif(rng), unif(rng));
    const Cx lhs = hyp3f2_unit_terminating(a, ap, -N, bp, 1.0 - double(N) - b);
    const Cx rhs = pochhammer(a + b, N) / pochhammer(b, N) *
                   hyp3f2_unit_terminating(a, bp - ap, -N, bp, a + b);
    worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(lhs)));
  }
  rep.record("identity 3F2 transformation (100 draws)", worst, 1e-11 * ts);

  worst = 0.0;
  auto signed_ratio = [](double num, double den) {
    int sn, sd;
    const double lg = log_abs_gamma_signed(num, sn) - log_abs_gamma_signed(den, sd);
    return sn * sd * std::exp(lg);
  };
  for (int it = 0; it < 100; ++it) {
    const double z = -5.0 + 10.0 * unif(rng) + 0.1234;
    const std::int64_t n = 1 + std::int64_t(rng() % 5);
    const double sign = (n % 2) ? -1.0 : 1.0;
    const double lhs1 = signed_ratio(z, z - double(n));
    const double rhs1 = sign * signed_ratio(-z + double(n) + 1.0, -z + 1.0);
    worst = std::max(worst, std::fabs(lhs1 - rhs1) / std::fabs(rhs1));
    const double lhs2 = signed_ratio(-z + double(n), -z);
    const double rhs2 = sign * signed_ratio(z + 1.0, z - double(n) + 1.0);
    worst = std::max(worst, std::fabs(lhs2 - rhs2) / std::fabs(rhs2));
  }
  rep.record("identity gamma-ratio reflections (100 draws)", worst, 1e-11 * ts);
}

int cmd_verify(const VerifyOpts& o) {
  const double ts = tol_scale();
  const std::string geom = o.geometry_given ? o.common.geometry : "";
  VerifyReport rep;
  if (o.suite == "reductions")
    verify_reductions(rep, ts);
  else if (o.suite == "normalization")
    verify_normalization(rep, ts, geom);
  else if (o.suite == "orthogonality")
    verify_orthogonality(rep, ts, geom);
  else if (o.suite == "ode-residual")
    verify_ode_residual(rep, ts, geom);
  else if (o.suite == "oracle")
    verify_oracle(rep, ts, geom);
  else if (o.suite == "limits")
    verify_limits(rep, ts);
  else if (o.suite == "identities")
    verify_identities(rep, ts);
  else
    throw ValidationError({"unknown suite: " + o.suite});

  std::ostringstream head;
  head << "suite=" << o.suite << " checks=" << rep.checked << " failed=" << rep.failed << "\n";
  emit(head.str() + rep.out.str(), o.common.output);
  return rep.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized MICZ-Kepler spectra and wavefunctions"};
  app.set_version_flag("--version", std::string("micz ") + kVersion);
  app.require_subcommand(1);

  SpectrumOpts so;
  auto* spectrum = app.add_subcommand("spectrum", "energy table for all valid states");
  add_common(spectrum, so.common);
  spectrum->add_option("--n-max", so.n_max, "largest principal quantum number");
  spectrum->add_option("--n", so.n, "select a single n");
  spectrum->add_option("--j", so.j, "select a single j");
  spectrum->add_option("--m", so.m, "select a single m");

  WaveOpts wo;
  auto* wave = app.add_subcommand("wavefunction", "sample one state on a radial grid");
  add_common(wave, wo.common);
  wave->add_option("--n", wo.n, "principal quantum number")->required();
  wave->add_option("--j", wo.j, "angular quantum number")->required();
  wave->add_option("--m", wo.m, "azimuthal quantum number")->required();
  wave->add_option("--grid-min", wo.grid_min, "first radial coordinate");
  wave->add_option("--grid-max", wo.grid_max, "last radial coordinate");
  wave->add_option("--grid-points", wo.grid_points, "number of samples");
  wave->add_option("--theta", wo.theta, "polar angle for the angular factor");
  wave->add_option("--phi", wo.phi, "azimuth for the angular factor");

  VerifyOpts vo;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify, vo.common);
  verify
      ->add_option("--suite", vo.suite,
                   "normalization|orthogonality|ode-residual|oracle|limits|reductions|identities")
      ->required();

  try {
    app.parse(argc, argv);
    vo.geometry_given = verify->count("--geometry") > 0;
    if (*spectrum) return cmd_spectrum(so);
    if (*wave) return cmd_wavefunction(wo);
    return cmd_verify(vo);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    std::cerr << "{\"error\":\"cli\",\"message\":" << json(e.what()).dump() << "}\n";
    return 2;
  } catch (const sphere::NumericInstability& e) {
    std::cerr << "{\"error\":\"numeric-instability\",\"message\":" << json(e.what()).dump()
              << ",\"condition\":" << e.condition() << "}\n";
    return 3;
  } catch (const ValidationError& e) {
    json v = json::array();
    for (const auto& s : e.violations()) v.push_back(s);
    std::cerr << "{\"error\":\"validation\",\"violations\":" << v.dump() << "}\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "{\"error\":\"runtime\",\"message\":" << json(e.what()).dump() << "}\n";
    return 2;
  }
}
