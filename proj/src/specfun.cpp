#include "micz/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace micz {
namespace specfun {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos, g = 7, 9 terms.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

template <class T>
T lanczos_log_gamma(T z) {
  // Valid for Re z >= 0.5; callers shift below that.
  z -= T(1.0);
  T x = T(kLanczos[0]);
  for (int i = 1; i < 9; ++i) x += T(kLanczos[i]) / (z + T(double(i)));
  T t = z + T(kLanczosG + 0.5);
  return T(0.5 * std::log(2.0 * kPi)) + (z + T(0.5)) * std::log(t) - t + std::log(x);
}

template <class T>
struct Kahan {
  T sum{};
  T carry{};
  void add(T x) {
    T y = x - carry;
    T t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

inline double abs_of(double x) { return std::fabs(x); }
inline double abs_of(const Complex& x) { return std::abs(x); }

void fill_diag(SeriesDiag* diag, double abs_sum, double abs_val) {
  if (!diag) return;
  diag->abs_sum = abs_sum;
  diag->condition = abs_val > 0.0 ? abs_sum / abs_val : abs_sum / 1e-300;
  diag->ill_conditioned = diag->condition > 1e8;
}

template <class Tb, class Tz>
auto hyp2f1_impl(std::int64_t a_nonpos, Tb b, Tb c, Tz z, SeriesDiag* diag) {
  using T = decltype(b * z);
  if (a_nonpos > 0) throw std::domain_error("hyp2f1_terminating: first parameter must be nonpositive");
  const std::int64_t big_n = -a_nonpos;
  Kahan<T> acc;
  Kahan<double> abs_acc;
  T term = T(1.0);
  acc.add(term);
  abs_acc.add(1.0);
  for (std::int64_t k = 0; k < big_n; ++k) {
    const T ck = c + T(double(k));
    if (abs_of(ck) == 0.0)
      throw std::domain_error("hyp2f1_terminating: zero denominator parameter in series");
    term *= (T(double(a_nonpos + k)) * (b + T(double(k)))) / (ck * T(double(k + 1))) * z;
    acc.add(term);
    abs_acc.add(abs_of(term));
  }
  fill_diag(diag, abs_acc.sum, abs_of(acc.sum));
  return acc.sum;
}

template <class T>
T hyp3f2_impl(T a1, T a2, std::int64_t neg_n, T b1, T b2, SeriesDiag* diag) {
  if (neg_n > 0) throw std::domain_error("hyp3f2_unit_terminating: third parameter must be nonpositive");
  const std::int64_t big_n = -neg_n;
  Kahan<T> acc;
  Kahan<double> abs_acc;
  T term = T(1.0);
  acc.add(term);
  abs_acc.add(1.0);
  for (std::int64_t k = 0; k < big_n; ++k) {
    const T d1 = b1 + T(double(k));
    const T d2 = b2 + T(double(k));
    if (abs_of(d1) == 0.0 || abs_of(d2) == 0.0)
      throw std::domain_error("hyp3f2_unit_terminating: zero denominator parameter in series");
    term *= (a1 + T(double(k))) * (a2 + T(double(k))) * T(double(neg_n + k)) /
            (d1 * d2 * T(double(k + 1)));
    acc.add(term);
    abs_acc.add(abs_of(term));
  }
  fill_diag(diag, abs_acc.sum, abs_of(acc.sum));
  return acc.sum;
}

}  // namespace

double log_gamma(double z) {
  if (!(z > 0.0)) throw std::domain_error("log_gamma: argument must be positive");
  if (z < 0.5) return lanczos_log_gamma(z + 1.0) - std::log(z);
  return lanczos_log_gamma(z);
}

Complex log_gamma(Complex z) {
  if (!(z.real() > 0.0)) throw std::domain_error("log_gamma: Re z must be positive");
  if (z.real() < 0.5) return lanczos_log_gamma(z + 1.0) - std::log(z);
  return lanczos_log_gamma(z);
}

double abs_gamma_complex(double x, double y) {
  if (!(x > 0.0)) throw std::domain_error("abs_gamma_complex: Re z must be positive");
  return std::exp(log_gamma(Complex(x, y)).real());
}

double log_factorial(std::int64_t n) {
  if (n < 0) throw std::domain_error("log_factorial: negative argument");
  return log_gamma(double(n) + 1.0);
}

double log_abs_gamma_signed(double x, int& sign) {
  sign = 1;
  if (x > 0.0) return log_gamma(x);
  if (x == std::floor(x)) throw std::domain_error("log_abs_gamma_signed: pole");
  // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
  const double s = std::sin(kPi * x);
  if (s < 0.0) sign = -1;
  return std::log(kPi / std::fabs(s)) - log_gamma(1.0 - x);
}

double pochhammer(double a, std::int64_t k) {
  double p = 1.0;
  for (std::int64_t i = 0; i < k; ++i) p *= a + double(i);
  return p;
}

Complex pochhammer(Complex a, std::int64_t k) {
  Complex p = 1.0;
  for (std::int64_t i = 0; i < k; ++i) p *= a + double(i);
  return p;
}

double hyp1f1_terminating(std::int64_t a_nonpos, double c, double x, SeriesDiag* diag) {
  if (a_nonpos > 0) throw std::domain_error("hyp1f1_terminating: first parameter must be nonpositive");
  if (c <= 0.0 && c == std::floor(c))
    throw std::domain_error("hyp1f1_terminating: c must not be a nonpositive integer");
  const std::int64_t big_n = -a_nonpos;
  Kahan<double> acc, abs_acc;
  double term = 1.0;
  acc.add(term);
  abs_acc.add(1.0);
  for (std::int64_t k = 0; k < big_n; ++k) {
    term *= double(a_nonpos + k) / ((c + double(k)) * double(k + 1)) * x;
    acc.add(term);
    abs_acc.add(std::fabs(term));
  }
  fill_diag(diag, abs_acc.sum, std::fabs(acc.sum));
  return acc.sum;
}

double hyp2f1_terminating(std::int64_t a_nonpos, double b, double c, double z, SeriesDiag* diag) {
  return hyp2f1_impl(a_nonpos, b, c, z, diag);
}

Complex hyp2f1_terminating(std::int64_t a_nonpos, Complex b, Complex c, Complex z,
                           SeriesDiag* diag) {
  return hyp2f1_impl(a_nonpos, b, c, z, diag);
}

double hyp3f2_unit_terminating(double a1, double a2, std::int64_t neg_n, double b1, double b2,
                               SeriesDiag* diag) {
  return hyp3f2_impl(a1, a2, neg_n, b1, b2, diag);
}

Complex hyp3f2_unit_terminating(Complex a1, Complex a2, std::int64_t neg_n, Complex b1, Complex b2,
                                SeriesDiag* diag) {
  return hyp3f2_impl(a1, a2, neg_n, b1, b2, diag);
}

double jacobi_p(std::int64_t n, double a, double b, double x) {
  if (n < 0) throw std::domain_error("jacobi_p: negative degree");
  if (!(a > -1.0) || !(b > -1.0)) throw std::domain_error("jacobi_p: parameters must exceed -1");
  if (n == 0) return 1.0;
  double p_prev = 1.0;
  double p = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
  for (std::int64_t k = 2; k <= n; ++k) {
    const double kk = double(k);
    const double c1 = 2.0 * kk * (kk + a + b) * (2.0 * kk + a + b - 2.0);
    const double c2 = (2.0 * kk + a + b - 1.0) *
                      ((2.0 * kk + a + b) * (2.0 * kk + a + b - 2.0) * x + a * a - b * b);
    const double c3 = 2.0 * (kk + a - 1.0) * (kk + b - 1.0) * (2.0 * kk + a + b);
    const double p_next = (c2 * p - c3 * p_prev) / c1;
    p_prev = p;
    p = p_next;
  }
  return p;
}

Complex sine_power_integral(double alpha, double beta) {
  if (!(alpha > 0.0)) throw std::domain_error("sine_power_integral: alpha must be positive");
  int s1 = 1, s2 = 1;
  const double lg_num = log_gamma(1.0 + alpha);
  const double lg_d1 = log_abs_gamma_signed(1.0 + 0.5 * (alpha + beta), s1);
  const double lg_d2 = log_abs_gamma_signed(1.0 + 0.5 * (alpha - beta), s2);
  const double mag = kPi * std::exp(lg_num - alpha * std::log(2.0) - lg_d1 - lg_d2) * s1 * s2;
  return mag * Complex(std::cos(0.5 * kPi * beta), std::sin(0.5 * kPi * beta));
}

}  // namespace specfun
}  // namespace micz
