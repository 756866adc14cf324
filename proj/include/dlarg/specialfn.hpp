#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "dlarg/characters.hpp"
#include "dlarg/error.hpp"

namespace dlarg {

// B_{2j} for j = 0..30, from exact rational recurrences.
const std::vector<long double>& bernoulli_even();
// B_{2j} / (2j)!, j = 0..30.
const std::vector<long double>& bernoulli_even_over_factorial();

struct EulerMaclaurinConfig {
  int shift_N = -1;           // <0: 12 + ceil|Im s|
  int bernoulli_terms_M = 20; // upper limit; fewer are used once the tail bound is met
  double target_abs_error = 1e-12;
};

struct HurwitzResult {
  cplx value;
  double tail_bound = 0.0;  // remainder estimate at the truncation actually used
  int shift_N = 0;
  int terms_M = 0;
};

// zeta(s, a) for 0 < a <= 2 (the public contract is (0,1]; (1,2] is used by the recurrence tests).
HurwitzResult hurwitz_zeta_ex(cplx s, double a, const EulerMaclaurinConfig& cfg = {});
inline cplx hurwitz_zeta(cplx s, double a, const EulerMaclaurinConfig& cfg = {}) {
  return hurwitz_zeta_ex(s, a, cfg).value;
}

// zeta(s, a_k) for many shifts at one s; shares the Bernoulli/Pochhammer coefficients.
// Returns the worst tail bound.
double hurwitz_zeta_batch(cplx s, std::span<const double> a, std::span<cplx> out,
                          const EulerMaclaurinConfig& cfg = {});

// Principal branch of log Gamma. PoleError at 0, -1, -2, ...
cplx log_gamma(cplx z);

namespace detail {

inline bool at_pole(double re, double im) {
  return im == 0.0 && re <= 0.0 && re == std::floor(re);
}
inline bool at_pole(const cplx& z) { return at_pole(z.real(), z.imag()); }
inline bool at_pole(double x) { return at_pole(x, 0.0); }
inline double re_of(double x) { return x; }
inline double re_of(const cplx& z) { return z.real(); }

}  // namespace detail

// psi(z) = Gamma'/Gamma. Asymptotic series after shifting Re z up to >= 12.
template <class Z>
Z digamma(Z z) {
  if (detail::at_pole(z)) throw PoleError("digamma: pole at non-positive integer");
  const auto& b = bernoulli_even();
  Z acc = Z(0);
  while (detail::re_of(z) < 12.0) {
    acc -= Z(1) / z;
    z += Z(1);
  }
  const Z w = Z(1) / (z * z);
  Z series = Z(0), p = w;
  for (int k = 1; k <= 12; ++k) {
    series += Z(static_cast<double>(b[k] / (2 * k))) * p;
    p *= w;
  }
  return acc + std::log(z) - Z(0.5) / z - series;
}

// psi'(z).
template <class Z>
Z trigamma(Z z) {
  if (detail::at_pole(z)) throw PoleError("trigamma: pole at non-positive integer");
  const auto& b = bernoulli_even();
  Z acc = Z(0);
  while (detail::re_of(z) < 12.0) {
    acc += Z(1) / (z * z);
    z += Z(1);
  }
  const Z inv = Z(1) / z, w = inv * inv;
  Z series = Z(0), p = w * inv;
  for (int k = 1; k <= 12; ++k) {
    series += Z(static_cast<double>(b[k])) * p;
    p *= w;
  }
  return acc + inv + Z(0.5) * w + series;
}

// \int_{T1}^{T2} Re psi(1/4 + a/2 + iu/2) du by adaptive quadrature.
// `gamma_shift` is a = 0 for even and 1 for odd characters.
double gamma_integral(int gamma_shift, double T1, double T2);

}  // namespace dlarg
