#pragma once

#include <complex>
#include <cstdint>

namespace micz {
namespace specfun {

using Complex = std::complex<double>;

// Summation diagnostics for the terminating series. condition is
// sum|term| / |sum|; values above 1e8 are flagged.
struct SeriesDiag {
  double abs_sum = 0.0;
  double condition = 1.0;
  bool ill_conditioned = false;
};

// log Gamma(z), z > 0. Lanczos approximation, relative error of
// exp(log_gamma) below 1e-13 on the paper-relevant range.
double log_gamma(double z);

// log Gamma(z) for Re z > 0.
Complex log_gamma(Complex z);

// |Gamma(x + i y)|, x > 0.
double abs_gamma_complex(double x, double y);

// log n!
double log_factorial(std::int64_t n);

// log|Gamma(x)| together with the sign of Gamma(x), for any non-pole real x.
double log_abs_gamma_signed(double x, int& sign);

// Pochhammer (a)_k as an explicit product; exact for exact inputs.
double pochhammer(double a, std::int64_t k);
Complex pochhammer(Complex a, std::int64_t k);

// 1F1(a; c; x) with a = -N a nonpositive integer (finite sum, compensated).
double hyp1f1_terminating(std::int64_t a_nonpos, double c, double x, SeriesDiag* diag = nullptr);

// 2F1(a, b; c; z) with a = -N a nonpositive integer; b, z may be complex.
double hyp2f1_terminating(std::int64_t a_nonpos, double b, double c, double z,
                          SeriesDiag* diag = nullptr);
Complex hyp2f1_terminating(std::int64_t a_nonpos, Complex b, Complex c, Complex z,
                           SeriesDiag* diag = nullptr);

// 3F2(a1, a2, -N; b1, b2; 1), terminating, unit argument.
double hyp3f2_unit_terminating(double a1, double a2, std::int64_t neg_n, double b1, double b2,
                               SeriesDiag* diag = nullptr);
Complex hyp3f2_unit_terminating(Complex a1, Complex a2, std::int64_t neg_n, Complex b1, Complex b2,
                                SeriesDiag* diag = nullptr);

// Jacobi polynomial P_n^{(a,b)}(x) by the three-term recurrence.
double jacobi_p(std::int64_t n, double a, double b, double x);

// Closed form of  int_0^pi sin^alpha(t) e^{i beta t} dt,  Re alpha > 0.
Complex sine_power_integral(double alpha, double beta);

}  // namespace specfun
}  // namespace micz
