#include "dlarg/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include "dlarg/analysis.hpp"
#include "dlarg/error.hpp"
#include "dlarg/extremal.hpp"
#include "dlarg/quadrature.hpp"

namespace dlarg {

namespace {

constexpr double kPi = std::numbers::pi;
const double kLog2Over2Pi = std::log(2.0) / (2.0 * kPi);

void check_q(std::uint32_t q) {
  if (q < 3 || q % 2 == 0) throw DomainError("modulus must be an odd prime, got q=" + std::to_string(q));
}

void finish(BoundReport& r) { r.value = r.recombined(); }

// ceil(e^{2 pi delta} / q), ignoring rounding noise when delta = log q / 2pi exactly.
double prime_ceiling(double delta, double q) {
  return std::ceil(std::exp(2.0 * kPi * delta) / q * (1.0 - 1e-12));
}

}  // namespace

double BoundReport::recombined() const {
  CompensatedSum s;
  for (const auto& c : components) s += c.value;
  return s.value();
}

double BoundReport::diagnostic(const std::string& key) const {
  for (const auto& [k, v] : diagnostics)
    if (k == key) return v;
  throw NotFoundError("bound report " + name + " has no diagnostic " + key);
}

double thm1_error_shape(double q, double T) {
  const double lq = std::log(q);
  const double llt = std::log(std::log(T + 3.0));
  return (lq + std::log(T + 1.0) * std::log(std::log(q * std::log(T + 3.0)))) / (lq * lq + llt * llt);
}

double thm1_delta_star(double q, double T) {
  const double x = q * std::log(q * (T + 1.0));
  return (std::log(x) - std::log(std::log(x))) / kPi;
}

double thm1_intermediate(double q, double T, double delta) {
  return std::log(q * (T + 1.0)) / (2.0 * kPi * delta) + std::exp(kPi * delta) / (q * delta) +
         1.0 / delta + std::log(T + 1.0) / (delta * delta * (T + 1.0));
}

namespace {
double thm1_leading(double q, double T) {
  return 0.5 + std::log(T + 1.0) / (2.0 * std::log(q * std::log(T + 3.0)));
}
}  // namespace

const Thm1Constants& thm1_constants() {
  static const Thm1Constants c = [] {
    Thm1Constants out;
    std::vector<double> excess, shape;
    for (double q : {101.0, 211.0, 401.0, 601.0, 997.0, 10007.0, 100003.0, 1000003.0})
      for (double T : {1e-3, 0.01, 0.1, 0.3, 0.5, 1.0, 2.0, 5.0, 10.0, 100.0, 1e4}) {
        excess.push_back(thm1_intermediate(q, T, thm1_delta_star(q, T)) - thm1_leading(q, T));
        shape.push_back(thm1_error_shape(q, T));
      }
    out.envelope = sup_ratio(excess, shape);
    out.grid_points = excess.size();
    return out;
  }();
  return c;
}

BoundReport thm1_bound(std::uint32_t q, double T) {
  check_q(q);
  if (!(T > 0.0)) throw DomainError("thm1_bound: T must be positive");
  BoundReport r;
  r.name = "thm1";
  r.inputs = {{"q", q}, {"T", T}};
  const double lead = thm1_leading(q, T);
  const double shape = thm1_error_shape(q, T);
  const double C = thm1_constants().envelope;
  r.components = {{"one_half", 0.5, "exact"},
                  {"log_term", lead - 0.5, "exact"},
                  {"error_envelope", C * shape, "fitted"}};
  const double dstar = thm1_delta_star(q, T);
  r.diagnostics = {{"envelope_constant", C},
                   {"error_shape", shape},
                   {"delta_star", dstar},
                   {"intermediate", thm1_intermediate(q, T, dstar)}};
  finish(r);
  return r;
}

const Thm2Constants& thm2_constants() {
  static const Thm2Constants c = [] {
    Thm2Constants out;
    const MeanSquareFit fit = mean_square_fit({31, 101}, {0.6, 1.0}, {0.1, 0.5});
    out.fit_residual = fit.fit.residual_rms;
    out.envelope_scale = fit.fit.envelope_scale;
    // prime-sum mean square enters the second moment with weight 1/pi^2
    out.c1 = out.envelope_scale * fit.fit.coefficients[0] / (kPi * kPi);
    out.c2 = out.envelope_scale * fit.fit.coefficients[1] / (kPi * kPi);
    double cm = 0.0;
    for (Sign s : {Sign::plus, Sign::minus})
      cm = std::max(cm, prime_mean_envelope({31, 101}, ExtremalParams{1.0, 0.0, 0.5, s}).constant);
    out.prime_mean_constant = cm;
    out.c3 = (1.0 + cm) / (kPi * kPi);
    return out;
  }();
  return c;
}

BoundReport thm2_bound(std::uint32_t q, double T, double delta, double integral_plus,
                       double integral_minus) {
  check_q(q);
  if (!(delta > 0.0)) throw DomainError("thm2_bound: delta must be positive");
  if (!(T >= 0.0)) throw DomainError("thm2_bound: T must be non-negative");
  const Thm2Constants& k = thm2_constants();
  const double lqt = std::log(q * (T + 1.0));
  const double ceil_ratio = prime_ceiling(delta, q);
  BoundReport r;
  r.name = "thm2";
  r.inputs = {{"q", q}, {"T", T}, {"delta", delta}, {"integral_plus", integral_plus},
              {"integral_minus", integral_minus}};
  const double lead = lqt / (2.0 * kPi * delta);
  r.components = {
      {"log_square", 2.0 * lead * lead, "exact"},
      {"transform_integral", 2.0 * ceil_ratio * (integral_plus + integral_minus), "exact"},
      {"higher_powers", k.c1 * ceil_ratio * std::min(1.0, T * T + 1.0 / (delta * delta)), "fitted"},
      {"off_diagonal", k.c2 * std::exp(2.0 * kPi * delta) / (q * std::sqrt(delta)), "fitted"},
      {"cross_terms", k.c3 * lqt / (delta * delta) * (1.0 + std::exp(kPi * delta) / q), "fitted"}};
  r.diagnostics = {{"c1", k.c1}, {"c2", k.c2}, {"c3", k.c3}, {"fit_residual", k.fit_residual}};
  finish(r);
  return r;
}

BoundReport thm2_bound(std::uint32_t q, double T, double delta) {
  double ip = 0.0, im = 0.0;
  if (delta > kLog2Over2Pi) {
    ip = transform_square_integral(ExtremalParams{delta, 0.0, T, Sign::plus}, kLog2Over2Pi, delta);
    im = transform_square_integral(ExtremalParams{delta, 0.0, T, Sign::minus}, kLog2Over2Pi, delta);
  }
  return thm2_bound(q, T, delta, ip, im);
}

namespace {
double simplified_lead(double q, double T) {
  const double lq = std::log(q);
  return 2.0 / (kPi * kPi) * std::min(std::log(lq), std::log(T * lq + 1.0));
}
}  // namespace

BoundReport thm2_simplified(std::uint32_t q, double T) {
  check_q(q);
  if (!(T > 0.0)) throw DomainError("thm2_simplified: T must be positive");
  static const double offset = [] {
    double c = 0.0;
    for (std::uint32_t qq : {101u, 211u, 401u, 601u, 997u})
      for (double beta : {0.1, 0.3, 0.5, 1.0, 2.0}) {
        const double t = 2.0 * kPi * beta / std::log(qq);
        c = std::max(c, thm2_bound(qq, t, std::log(qq) / (2.0 * kPi)).value - simplified_lead(qq, t));
      }
    return c;
  }();
  BoundReport r;
  r.name = "thm2_simplified";
  r.inputs = {{"q", q}, {"T", T}};
  r.components = {{"log_term", simplified_lead(q, T), "exact"}, {"offset", offset, "fitted"}};
  finish(r);
  return r;
}

double cor2_integral(double beta) {
  static std::mutex mutex;
  static std::map<double, double> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(beta); it != memo.end()) return it->second;
  }
  double s = 0.0;
  for (Sign sg : {Sign::plus, Sign::minus})
    s += transform_square_integral(ExtremalParams{1.0, 0.0, beta, sg}, 0.0, 1.0);
  std::lock_guard lock(mutex);
  memo.emplace(beta, s);
  return s;
}

namespace {
BoundReport proportion_bound(const char* name, double beta, double weight) {
  if (!(beta > 0.25)) throw DomainError(std::string(name) + ": beta must exceed 1/4");
  const double I = cor2_integral(beta);
  const double num = 4.0 * beta * beta - 2.0 * beta + 0.25;
  const double den = 4.0 * beta * beta - 2.0 * beta + 2.0 + weight * I;
  BoundReport r;
  r.name = name;
  r.inputs = {{"beta", beta}};
  r.components = {{"ratio", num / den, "exact"}};
  r.diagnostics = {{"integral", I}, {"numerator", num}, {"denominator", den}};
  finish(r);
  return r;
}
}  // namespace

BoundReport cor2_lower_bound(double beta) { return proportion_bound("cor2", beta, 2.0); }
BoundReport shifted_cor_bound(double beta) { return proportion_bound("shifted", beta, 1.0); }

LambdaRatio min_lambda_ratio(double beta, double m) {
  if (!(beta > 0.25)) throw DomainError("min_lambda_ratio: beta must exceed 1/4");
  if (!(m >= 0.0)) throw DomainError("min_lambda_ratio: mean square must be non-negative");
  auto f = [&](double l) {
    const double den = 4.0 * beta * beta + 4.0 * beta * l + m;
    if (!(den > 0.0)) throw DomainError("min_lambda_ratio: degenerate denominator");
    return (2.0 * beta + l) * (2.0 * beta + l) / den;
  };
  LambdaRatio r;
  r.at_minus_half = f(-0.5);
  auto [x, fx] = boost::math::tools::brent_find_minima(f, -0.5, 0.5, 52);
  r.argmin = x;
  r.value = fx;
  for (double e : {-0.5, 0.5})
    if (f(e) <= r.value) {
      r.value = f(e);
      r.argmin = e;
    }
  const double stationary = -m / (2.0 * beta);
  r.endpoint_is_min = stationary <= -0.5;
  if (r.endpoint_is_min) {
    r.exact_argmin = -0.5;
    r.exact_min = r.at_minus_half;
  } else {
    r.exact_argmin = stationary;
    r.exact_min = 1.0 - m / (4.0 * beta * beta);
  }
  return r;
}

double hr_complement(double beta) {
  const double b2 = beta * beta, p2 = kPi * kPi;
  const double den = 4.0 * b2 - 1.0;
  if (den == 0.0) throw PoleError("hr_bound: pole at beta = 1/2");
  return (3.0 + p2 + 72.0 * b2 - 8.0 * p2 * b2 + 48.0 * b2 * b2 + 16.0 * p2 * b2 * b2) /
         (12.0 * p2 * den * den);
}

double hr_bound(double beta) { return 1.0 - hr_complement(beta); }

const ZhaoConstants& zhao_constants() {
  static const ZhaoConstants z = [] {
    auto g = [](double b) { return b * b * hr_complement(b); };
    auto [x, fx] = boost::math::tools::brent_find_minima(g, 0.55, 3.0, 52);
    return ZhaoConstants{x, fx};
  }();
  return z;
}

double zhao_bound(double beta) {
  if (!(beta > 0.5)) throw DomainError("zhao_bound: beta must exceed 1/2");
  const ZhaoConstants& z = zhao_constants();
  if (beta < z.switch_beta) return 1.0 / (1.0 + hr_complement(beta));
  return 1.0 / (1.0 + z.c / (beta * beta));
}

double evaluate_bound(const std::string& id, double beta) {
  if (id == "cor2") return cor2_lower_bound(beta).value;
  if (id == "shifted") return shifted_cor_bound(beta).value;
  if (id == "hr") return hr_bound(beta);
  if (id == "zhao") return zhao_bound(beta);
  if (id == "zero") return 0.0;
  throw DomainError("unknown bound id '" + id + "'");
}

double crossing_finder(const std::string& f, const std::string& g, double lo, double hi) {
  if (!(hi > lo)) throw DomainError("crossing_finder: empty search interval");
  auto d = [&](double b) { return evaluate_bound(f, b) - evaluate_bound(g, b); };
  constexpr int kCells = 64;
  double a = lo, da = d(lo);
  for (int k = 1; k <= kCells; ++k) {
    const double b = lo + (hi - lo) * k / kCells;
    const double db = d(b);
    if (db == 0.0) {
      if (da != 0.0) return b;  // landed on the root
      a = b;
      continue;
    }
    if (da != 0.0 && (da < 0.0) != (db < 0.0)) {
      std::uintmax_t iters = 100;
      auto tol = [](double x, double y) { return std::abs(x - y) <= 1e-7; };
      auto [x0, x1] = boost::math::tools::toms748_solve(d, a, b, da, db, tol, iters);
      return 0.5 * (x0 + x1);
    }
    a = b;
    da = db;
  }
  throw NotFoundError("no crossing of " + f + " and " + g + " in [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
}

RoughEstimate rough_integral_estimate(double beta) {
  if (!(beta > 0.0)) throw DomainError("rough_integral_estimate: beta must be positive");
  auto f = [](double u) {
    if (u < 1e-8) return 4.0 * kPi * kPi * u;
    const double s = std::sin(2.0 * kPi * u);
    return s * s / u;
  };
  std::vector<double> cuts;
  for (double x = 0.5; x < beta; x += 0.5) cuts.push_back(x);
  RoughEstimate r;
  r.quadrature = 2.0 / (kPi * kPi) *
                 integrate_adaptive(f, 0.0, beta, 1e-12, cuts, 4 * cuts.size() + 4000).value;
  r.comparison = std::log(beta + 1.0) / (kPi * kPi);
  r.offset = r.quadrature - r.comparison;
  return r;
}

}  // namespace dlarg
