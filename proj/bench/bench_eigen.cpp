// Timing comparison of the serial and OpenMP-parallel paths of the
// Sturm-Liouville eigen-solver and of batch wavefunction evaluation.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

#include "micz/oracle.hpp"
#include "micz/sphere.hpp"

using namespace micz;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double bench_solve(oracle::Exec exec, int cells, int levels) {
  PhysParams p;
  p.geometry = Geometry::Sphere;
  p.r_curv = 1.0;
  p.lambda1 = 0.4;
  oracle::SolveOptions opt;
  opt.base_cells = cells;
  opt.exec = exec;
  const auto t0 = Clock::now();
  const auto res = oracle::solve_quasi_radial(p, 1.5, levels, opt);
  const double secs = seconds_since(t0);
  std::printf("  eigen %s  cells=%d levels=%d  ground=%.12g  %.3fs\n",
              exec == oracle::Exec::Serial ? "serial  " : "parallel", cells, levels,
              res.eigenvalues[0], secs);
  return secs;
}

double bench_eval(bool parallel, int samples) {
  PhysParams p;
  p.geometry = Geometry::Sphere;
  p.r_curv = 2.0;
  p.lambda1 = 0.3;
  const QuantumNumbers q{HalfInt::from_int(8), HalfInt::from_int(2), HalfInt::from_int(1)};
  const auto st = sphere::make_state(p, q);
  std::vector<double> out(samples);
  const double kPi = std::numbers::pi;
  const auto t0 = Clock::now();
  if (parallel) {
#ifdef MICZ_HAVE_OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int i = 0; i < samples; ++i) {
      const double chi = 0.01 + (kPi - 0.02) * i / (samples - 1);
      out[i] = sphere::quasi_radial_eval(st, chi);
    }
  } else {
    for (int i = 0; i < samples; ++i) {
      const double chi = 0.01 + (kPi - 0.02) * i / (samples - 1);
      out[i] = sphere::quasi_radial_eval(st, chi);
    }
  }
  const double secs = seconds_since(t0);
  double acc = 0.0;
  for (double v : out) acc += v * v;
  std::printf("  eval  %s  samples=%d  checksum=%.6g  %.3fs\n",
              parallel ? "parallel" : "serial  ", samples, acc, secs);
  return secs;
}

}  // namespace

int main() {
  std::printf("eigen-solver, quasi-radial sphere channel\n");
  const double es = bench_solve(oracle::Exec::Serial, 24000, 12);
  const double ep = bench_solve(oracle::Exec::Parallel, 24000, 12);
  std::printf("  speedup x%.2f\n\n", es / ep);

  std::printf("batch quasi-radial evaluation\n");
  const double vs = bench_eval(false, 2000000);
  const double vp = bench_eval(true, 2000000);
  std::printf("  speedup x%.2f\n", vs / vp);
  return 0;
}
