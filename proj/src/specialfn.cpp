#include "dlarg/specialfn.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <numbers>

#include "dlarg/quadrature.hpp"

namespace dlarg {

namespace {

using boost::multiprecision::cpp_rational;
constexpr int kMaxPairs = 30;

struct BernoulliTables {
  std::vector<long double> b2n;
  std::vector<long double> b2n_over_fact;
};

BernoulliTables build_bernoulli() {
  // B_m from sum_{k=0}^{m} C(m+1,k) B_k = 0.
  const int top = 2 * kMaxPairs;
  std::vector<cpp_rational> B(top + 1);
  B[0] = 1;
  for (int m = 1; m <= top; ++m) {
    cpp_rational acc = 0;
    cpp_rational binom = 1;  // C(m+1, k)
    for (int k = 0; k < m; ++k) {
      acc += binom * B[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    B[m] = -acc / (m + 1);
  }
  BernoulliTables t;
  cpp_rational fact = 1;
  for (int j = 0; j <= kMaxPairs; ++j) {
    if (j > 0) fact *= cpp_rational((2 * j - 1) * (2 * j));
    t.b2n.push_back(static_cast<long double>(B[2 * j]));
    t.b2n_over_fact.push_back(static_cast<long double>(B[2 * j] / fact));
  }
  return t;
}

const BernoulliTables& tables() {
  static const BernoulliTables t = build_bernoulli();
  return t;
}

int default_shift(cplx s, const EulerMaclaurinConfig& cfg) {
  int N = cfg.shift_N >= 0 ? cfg.shift_N : 12 + static_cast<int>(std::ceil(std::abs(s.imag())));
  const int floor_N = static_cast<int>(std::ceil(std::abs(s.imag()) / 2.0)) + 10;
  return std::max(N, floor_N);
}

// Coefficients c_j = B_{2j}/(2j)! * s(s+1)...(s+2j-2) and, per j, the remainder
// bound factor 4|s(s+1)...(s+2j)|/(2 pi)^{2j+1}/(sigma+2j) (to be multiplied by x^{-sigma-2j}).
struct EMCoefficients {
  std::vector<cplx> c;
  std::vector<double> rem;
};

EMCoefficients em_coefficients(cplx s, int M) {
  const auto& bf = tables().b2n_over_fact;
  EMCoefficients e;
  e.c.resize(M + 1);
  e.rem.resize(M + 1);
  cplx poch = s;  // s(s+1)...(s+2j-2)
  double two_pi_pow = 2.0 * std::numbers::pi;
  for (int j = 1; j <= M; ++j) {
    e.c[j] = static_cast<double>(bf[j]) * poch;
    const cplx next = poch * (s + double(2 * j - 1)) * (s + double(2 * j));
    two_pi_pow *= 4.0 * std::numbers::pi * std::numbers::pi;
    const double denom = s.real() + 2.0 * j;
    e.rem[j] = denom > 0 ? 4.0 * std::abs(next) / two_pi_pow / denom
                         : std::numeric_limits<double>::infinity();
    poch = next;
  }
  return e;
}

int choose_terms(const EMCoefficients& e, double sigma, double x, int M, double target,
                 double* bound) {
  double best = std::numeric_limits<double>::infinity();
  int best_j = M;
  for (int j = 1; j <= M; ++j) {
    const double r = e.rem[j] * std::pow(x, -sigma - 2.0 * j);
    if (r < best) {
      best = r;
      best_j = j;
    }
    if (r <= target) {
      *bound = r;
      return j;
    }
  }
  *bound = best;
  return best_j;
}

cplx em_sum(cplx s, double a, int N, int M, const EMCoefficients& e) {
  CompensatedSum re, im;
  for (int k = 0; k < N; ++k) {
    const cplx t = std::exp(-s * std::log(k + a));
    re += t.real();
    im += t.imag();
  }
  const double x = N + a;
  const double lx = std::log(x);
  const cplx xs = std::exp(-s * lx);  // x^{-s}
  cplx tail = xs * x / (s - 1.0) + 0.5 * xs;
  const double inv_x2 = 1.0 / (x * x);
  double xp = 1.0 / x;  // x^{-2j+1}
  for (int j = 1; j <= M; ++j) {
    tail += e.c[j] * xs * xp;
    xp *= inv_x2;
  }
  return cplx(re.value(), im.value()) + tail;
}

void check_args(cplx s, double a) {
  if (s == cplx(1.0, 0.0)) throw PoleError("hurwitz_zeta: pole at s = 1");
  if (!(a > 0.0 && a <= 2.0)) throw DomainError("hurwitz_zeta: shift a outside (0, 1]");
  if (std::abs(s.imag()) > 1e4) throw DomainError("hurwitz_zeta: |Im s| > 1e4");
}

}  // namespace

const std::vector<long double>& bernoulli_even() { return tables().b2n; }
const std::vector<long double>& bernoulli_even_over_factorial() { return tables().b2n_over_fact; }

HurwitzResult hurwitz_zeta_ex(cplx s, double a, const EulerMaclaurinConfig& cfg) {
  check_args(s, a);
  const int M = std::min(cfg.bernoulli_terms_M, kMaxPairs);
  HurwitzResult r;
  r.shift_N = default_shift(s, cfg);
  const EMCoefficients e = em_coefficients(s, M);
  r.terms_M = choose_terms(e, s.real(), r.shift_N + a, M, cfg.target_abs_error, &r.tail_bound);
  r.value = em_sum(s, a, r.shift_N, r.terms_M, e);
  return r;
}

double hurwitz_zeta_batch(cplx s, std::span<const double> a, std::span<cplx> out,
                          const EulerMaclaurinConfig& cfg) {
  if (out.size() < a.size()) throw DomainError("hurwitz_zeta_batch: output too small");
  const int M = std::min(cfg.bernoulli_terms_M, kMaxPairs);
  const int N = default_shift(s, cfg);
  const EMCoefficients e = em_coefficients(s, M);
  double a_min = 2.0;
  for (double v : a) {
    check_args(s, v);
    a_min = std::min(a_min, v);
  }
  double bound = 0.0;
  // the remainder bound decreases in x, so the smallest shift decides M
  const int terms = choose_terms(e, s.real(), N + a_min, M, cfg.target_abs_error, &bound);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = em_sum(s, a[i], N, terms, e);
  return bound;
}

cplx log_gamma(cplx z) {
  if (detail::at_pole(z)) throw PoleError("log_gamma: pole at non-positive integer");
  cplx shift_log = 0.0;
  while (z.real() < 12.0) {
    shift_log += std::log(z);
    z += 1.0;
  }
  const auto& b = bernoulli_even();
  const cplx inv = 1.0 / z, w = inv * inv;
  cplx series = 0.0, p = inv;
  for (int k = 1; k <= 12; ++k) {
    series += static_cast<double>(b[k] / ((2 * k) * (2 * k - 1))) * p;
    p *= w;
  }
  const double half_log_2pi = 0.5 * std::log(2.0 * std::numbers::pi);
  return (z - 0.5) * std::log(z) - z + half_log_2pi + series - shift_log;
}

double gamma_integral(int gamma_shift, double T1, double T2) {
  if (T2 < T1) throw DomainError("gamma_integral: T1 > T2");
  if (T1 == T2) return 0.0;
  const double c = 0.25 + 0.5 * gamma_shift;
  auto f = [c](double u) { return digamma(cplx(c, 0.5 * u)).real(); };
  std::vector<double> cuts;
  if (T1 < 0.0 && T2 > 0.0) cuts.push_back(0.0);
  return integrate_adaptive(f, T1, T2, 1e-12, cuts).value;
}

}  // namespace dlarg
