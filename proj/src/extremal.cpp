#include "dlarg/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>

#include "dlarg/arith.hpp"
#include "dlarg/error.hpp"
#include "dlarg/quadrature.hpp"
#include "dlarg/specialfn.hpp"

namespace dlarg {

namespace {

constexpr double kPi = std::numbers::pi;
// |H(y) - 1| <= kTailC / y^3 for y >= 10 (checked in the tests).
constexpr double kTailC = 0.0355;
constexpr double kTailTarget = 1e-9;
constexpr double kAccuracyLimit = 1e-7;

template <class Z>
Z sinc_t(Z z) {
  if (std::abs(z) < 1e-4) {
    const Z w = kPi * z;
    const Z w2 = w * w;
    return Z(1.0) - w2 / 6.0 + w2 * w2 / 120.0;
  }
  return std::sin(kPi * z) / (kPi * z);
}

// H on Re z >= 0.
template <class Z>
Z odd_part_right(Z z) {
  const Z sc = sinc_t(z);
  const Z sn = std::sin(kPi * z) / kPi;
  return Z(1.0) + (2.0 * z - 1.0) * sc * sc - 2.0 * sn * sn * trigamma(z + Z(1.0));
}

template <class Z>
Z odd_part(Z z) {
  if (std::real(z) < 0.0) return -odd_part_right(Z(-z));
  return odd_part_right(z);
}

// G(y) = H(y) - 1 for y >= 0.
double g_right(double y) { return odd_part_right(y) - 1.0; }

// R - indicator - (+-)(Fejer part), centred at 0 with half length h, at x >= 0.
double smooth_part(double delta, double h, double x) {
  const double a = g_right(delta * (h + x));
  const double d = h - x;
  const double b = d == 0.0 ? 0.0 : (d > 0 ? 1.0 : -1.0) * g_right(delta * std::abs(d));
  return 0.5 * (a + b);
}

struct TransformTable {
  double delta = 0, h = 0, u_max = 0, X = 0;
  std::vector<double> x, we;
  double tail_bound = 0, quad_error = 0;

  double eval(double u) const {
    const double w = 2.0 * kPi * u;
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += we[i] * std::cos(w * x[i]);
    return 2.0 * acc;
  }
};

void fill_nodes(double delta, double h, double X, double panel, int order,
                std::vector<double>& xs, std::vector<double>& ws) {
  auto segment = [&](double a, double b) {
    const int n = std::max(1, static_cast<int>(std::ceil((b - a) / panel)));
    for (int k = 0; k < n; ++k)
      append_gauss_legendre(a + (b - a) * k / n, a + (b - a) * (k + 1) / n, order, xs, ws);
  };
  segment(0.0, h);
  segment(h, X);
  for (std::size_t i = 0; i < xs.size(); ++i) ws[i] *= smooth_part(delta, h, xs[i]);
}

std::shared_ptr<const TransformTable> build_table(double delta, double h, double u_max) {
  auto t = std::make_shared<TransformTable>();
  t->delta = delta;
  t->h = h;
  t->u_max = u_max;
  const double reach = std::max(10.0 / delta, std::sqrt(kTailC / (delta * delta * delta * kTailTarget)));
  t->X = h + reach;
  t->tail_bound = kTailC / (delta * delta * delta * reach * reach);
  const double panel = 1.0 / (delta + u_max);
  fill_nodes(delta, h, t->X, panel, 12, t->x, t->we);

  TransformTable coarse = *t;
  coarse.x.clear();
  coarse.we.clear();
  fill_nodes(delta, h, t->X, panel, 10, coarse.x, coarse.we);
  for (double u : {0.0, 0.5 * u_max, u_max})
    t->quad_error = std::max(t->quad_error, std::abs(t->eval(u) - coarse.eval(u)));
  if (t->tail_bound + t->quad_error > kAccuracyLimit)
    throw AccuracyError("fourier_r: transform accuracy " +
                        std::to_string(t->tail_bound + t->quad_error) + " above limit");
  return t;
}

std::shared_ptr<const TransformTable> table_for(double delta, double h, double u) {
  static std::mutex mutex;
  static std::map<std::tuple<double, double, double>, std::shared_ptr<const TransformTable>> cache;
  double u_max = 1.5 * delta;
  while (u_max < std::abs(u)) u_max *= 2.0;
  const auto key = std::make_tuple(delta, h, u_max);
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto t = build_table(delta, h, u_max);
  std::lock_guard lock(mutex);
  if (cache.size() >= 12) cache.clear();
  cache.emplace(key, t);
  return t;
}

}  // namespace

void validate(const ExtremalParams& p) {
  if (!(p.delta > 0.0)) throw DomainError("extremal: delta must be positive");
  if (!(p.half_length > 0.0)) throw DomainError("extremal: half_length must be positive");
}

void validate_prime_range(const ExtremalParams& p) {
  validate(p);
  if (p.delta > p.delta_cap)
    throw DomainError("extremal: delta " + std::to_string(p.delta) + " above cap " +
                      std::to_string(p.delta_cap));
  if (std::exp(2.0 * kPi * p.delta) > static_cast<double>(kSieveCap))
    throw DomainError("extremal: e^{2 pi delta} above the sieve cap");
}

cplx sinc(cplx z) { return sinc_t(z); }
double sinc(double x) { return sinc_t(x); }

cplx beurling_b(Sign sign, cplx z) {
  const cplx s = sinc_t(z);
  return odd_part(z) + sign_value(sign) * s * s;
}

double beurling_b(Sign sign, double x) {
  const double s = sinc_t(x);
  return odd_part(x) + sign_value(sign) * s * s;
}

cplx selberg_r(const ExtremalParams& p, cplx s) {
  const double d = p.delta, h = p.half_length;
  const cplx y = s - p.center_T0;
  return 0.5 * (beurling_b(p.sign, d * (h + y)) + beurling_b(p.sign, d * (h - y)));
}

double selberg_r(const ExtremalParams& p, double x) {
  const double d = p.delta, h = p.half_length;
  const double y = x - p.center_T0;
  return 0.5 * (beurling_b(p.sign, d * (h + y)) + beurling_b(p.sign, d * (h - y)));
}

double interval_indicator(const ExtremalParams& p, double x) {
  const double y = std::abs(x - p.center_T0);
  if (y < p.half_length) return 1.0;
  if (y == p.half_length) return 0.5;
  return 0.0;
}

TransformValue fourier_r(const ExtremalParams& p, double u) {
  validate(p);
  const double d = p.delta, h = p.half_length;
  const auto table = table_for(d, h, u);
  const double au = std::abs(u);
  const double box = au == 0.0 ? 2.0 * h : std::sin(2.0 * kPi * h * u) / (kPi * u);
  const double fejer = au < d ? (1.0 - au / d) / d * std::cos(2.0 * kPi * h * u) : 0.0;
  const double centred = box + table->eval(u) + sign_value(p.sign) * fejer;
  TransformValue out;
  out.u = u;
  out.value = p.center_T0 == 0.0 ? cplx(centred, 0.0)
                                  : std::polar(1.0, -2.0 * kPi * p.center_T0 * u) * centred;
  out.abs_error_bound = table->tail_bound + table->quad_error;
  return out;
}

double transform_square_integral(const ExtremalParams& p, double u_min, double u_max,
                                 SquareWeight weight) {
  validate(p);
  if (u_min == u_max) return 0.0;
  if (!(0.0 <= u_min && u_min < u_max && u_max <= p.delta * (1.0 + 1e-12)))
    throw DomainError("transform_square_integral: need 0 <= u_min < u_max <= delta");
  auto f = [&](double u) {
    const cplx v = fourier_r(p, u).value;
    return weight == SquareWeight::u ? u * std::norm(v) : u * v.real() * v.real();
  };
  return integrate_adaptive(f, u_min, u_max, 1e-10).value;
}

ExtremalConstants extremal_constants(const ExtremalParams& p) {
  validate(p);
  ExtremalConstants c;
  const double d = p.delta, h = p.half_length, T0 = p.center_T0;
  c.growth = -1e300;
  for (int k = -200; k <= 200; ++k) {
    const double y = 5.0 * k / 200.0;
    const double v = std::abs(selberg_r(p, cplx(T0, y)));
    if (v > 0) c.growth = std::max(c.growth, std::log(v) - 2.0 * kPi * d * std::abs(y));
  }
  for (int k = 0; k <= 600; ++k) {
    const double dist = std::pow(10.0, -3.0 + 5.0 * k / 600.0) / d;  // 1e-3/d .. 1e2/d
    const double env = std::min(1.0, 1.0 / (d * dist * d * dist));
    for (double x : {T0 + h + dist, T0 - h - dist})
      c.decay = std::max(c.decay, std::abs(selberg_r(p, x)) / env);
  }
  for (int k = -80; k <= 80; ++k) {
    const double u = d * k / 81.0;
    const cplx lead = u == 0.0 ? cplx(2.0 * h)
                               : std::polar(1.0, -2.0 * kPi * T0 * u) *
                                     (std::sin(2.0 * kPi * h * u) / (kPi * u));
    const cplx v = fourier_r(p, u).value;
    c.leading = std::max(c.leading, d * std::abs(v - lead));
    c.u_transform = std::max(c.u_transform, std::abs(u * v));
  }
  return c;
}

double derivative_decay_constant(double y0) {
  double best = 0.0;
  const int n = 40000;
  for (int k = 0; k <= n; ++k) {
    const double y = y0 * std::pow(1000.0 / y0, double(k) / n);
    const double e = 1e-5 * std::max(1.0, y * 1e-2);
    for (Sign s : {Sign::plus, Sign::minus}) {
      const double dv = (beurling_b(s, y + e) - beurling_b(s, y - e)) / (2.0 * e);
      best = std::max(best, std::abs(dv) * y * y);
    }
  }
  return best;
}

}  // namespace dlarg
