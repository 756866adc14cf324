#pragma once

#include <memory>
#include <vector>

#include "dlarg/characters.hpp"

namespace dlarg {

enum class Sign { plus, minus };

inline double sign_value(Sign s) { return s == Sign::plus ? 1.0 : -1.0; }
inline const char* sign_name(Sign s) { return s == Sign::plus ? "plus" : "minus"; }

// R^{+-} for the interval [T0 - h, T0 + h] at exponential type 2 pi delta.
struct ExtremalParams {
  double delta = 1.0;
  double center_T0 = 0.0;
  double half_length = 1.0;
  Sign sign = Sign::plus;
  double delta_cap = 1.6;  // limit for anything that sums over n <= e^{2 pi delta}
};

// DomainError on delta <= 0 or half_length <= 0.
void validate(const ExtremalParams& p);
// Additionally: delta within delta_cap and e^{2 pi delta} within the sieve cap.
void validate_prime_range(const ExtremalParams& p);

// B^{+-}(z) = H(z) +- sinc(z)^2 where, for Re z >= 0,
//   H(z) = 1 + (2z - 1) sinc(z)^2 - 2 (sin(pi z)/pi)^2 psi'(z + 1)
// and H is odd. This is the defining series summed in closed form.
cplx beurling_b(Sign sign, cplx z);
double beurling_b(Sign sign, double x);

// sin(pi z)/(pi z), Taylor-expanded near 0.
cplx sinc(cplx z);
double sinc(double x);

cplx selberg_r(const ExtremalParams& p, cplx s);
double selberg_r(const ExtremalParams& p, double x);

// Indicator of [T0 - h, T0 + h], 1/2 at the endpoints.
double interval_indicator(const ExtremalParams& p, double x);

struct TransformValue {
  double u = 0.0;
  cplx value;
  double abs_error_bound = 0.0;
};

// \int R(x) e^{-2 pi i u x} dx. The indicator and Fejer-kernel pieces of R are
// transformed exactly; the remaining even part is integrated numerically on
// [0, X] with X chosen from the x^{-3} decay of that part (tail below 1e-9).
TransformValue fourier_r(const ExtremalParams& p, double u);

enum class SquareWeight { u, u_re2 };

// \int_{u_min}^{u_max} u |R^(u)|^2 du (weight u) or u (Re R^(u))^2 (weight u_re2).
double transform_square_integral(const ExtremalParams& p, double u_min, double u_max,
                                 SquareWeight weight = SquareWeight::u);

// Fitted constants behind the O-statements about R and its transform.
struct ExtremalConstants {
  double growth = 0.0;      // max log|R(T0+iy)| - 2 pi delta |y| over |y| <= 5
  double decay = 0.0;       // max |R(x)| / min(1, (delta(|x-T0|-h))^{-2}) outside the interval
  double leading = 0.0;     // max delta |R^(u) - e^{-2pi i T0 u} sin(2 pi h u)/(pi u)| over |u| < delta
  double u_transform = 0.0; // max |u R^(u)|
};
ExtremalConstants extremal_constants(const ExtremalParams& p);

// sup over y >= y0 of |B'(y)| y^2, sampled; used for tail bounds of sums over zeros.
double derivative_decay_constant(double y0 = 2.0);

}  // namespace dlarg
