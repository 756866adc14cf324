#include "dlarg/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <tuple>

#include "dlarg/arith.hpp"
#include "dlarg/error.hpp"
#include "dlarg/lfunc.hpp"
#include "dlarg/quadrature.hpp"
#include "dlarg/specialfn.hpp"

namespace dlarg {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFar = 2000.0;  // numerical range for the smooth integrals, around T0
constexpr double kSEnvelope = 2.0;

double re_psi(double c, double u) { return digamma(cplx(c, 0.5 * u)).real(); }

// \int_lo^hi Re psi(c + iu/2) du in closed form.
double psi_integral_exact(double c, double lo, double hi) {
  return 2.0 * (log_gamma(cplx(c, 0.5 * hi)).imag() - log_gamma(cplx(c, 0.5 * lo)).imag());
}

// Adaptive quadrature with a breakpoint every `period`, for slowly decaying oscillations.
QuadResult oscillatory_integral(const std::function<double(double)>& f, double lo, double hi,
                                double period, std::vector<double> extra, double tol) {
  std::vector<double> cuts = std::move(extra);
  const double n = std::ceil((hi - lo) / period);
  for (double k = 1; k < n; ++k) cuts.push_back(lo + k * period);
  return integrate_adaptive(f, lo, hi, tol, cuts, static_cast<std::size_t>(n) * 4 + 4000);
}

// \int_{X}^{inf} g(y) dy via y = X/t.
QuadResult far_integral(const std::function<double(double)>& g, double X, double tol) {
  auto h = [&](double t) { return g(X / t) * X / (t * t); };
  return integrate_adaptive(h, 0.0, 1.0, tol);
}

// Oscillation-averaged R far from the interval: +-(1/(4 pi^2 delta^2)) ((y+h)^-2 + (y-h)^-2).
double averaged_r(const ExtremalParams& p, double y) {
  const double d = p.delta, h = p.half_length;
  return sign_value(p.sign) / (4.0 * kPi * kPi * d * d) *
         (1.0 / ((y + h) * (y + h)) + 1.0 / ((y - h) * (y - h)));
}

struct SmoothTerms {
  double gamma_term = 0.0;
  double density_tail = 0.0;
  double error = 0.0;
};

SmoothTerms smooth_terms(const ExtremalParams& p, std::uint32_t q, int a, double H) {
  static std::mutex mutex;
  static std::map<std::tuple<double, double, double, int, std::uint32_t, int, double>, SmoothTerms>
      memo;
  const auto key = std::make_tuple(p.delta, p.center_T0, p.half_length,
                                   p.sign == Sign::plus ? 1 : -1, q, a, H);
  {
    std::lock_guard lock(mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  const double c = 0.25 + 0.5 * a;
  const double T0 = p.center_T0, h = p.half_length, d = p.delta;
  const double logq = std::log(q / kPi);
  const double period = 1.0 / d;
  SmoothTerms out;

  // gamma term: exact on the interval, numerical for R - indicator
  double g = psi_integral_exact(c, T0 - h, T0 + h);
  auto dpart = [&](double y) {
    const double u = T0 + y;
    return (selberg_r(p, u) - interval_indicator(p, u)) * re_psi(c, u);
  };
  auto qr = oscillatory_integral(dpart, -kFar, kFar, period, {-h, h}, 1e-10);
  g += qr.value;
  out.error += qr.abs_error;
  for (double s : {1.0, -1.0}) {
    auto far = far_integral([&](double y) { return averaged_r(p, y) * re_psi(c, T0 + s * y); },
                            kFar, 1e-12);
    g += far.value;
    out.error += far.abs_error;
  }
  // neglected oscillating and x^-3 parts beyond kFar
  out.error += 2.0 * std::log(kFar + std::abs(T0)) / (d * d * kFar * kFar);
  out.gamma_term = g / (2.0 * kPi);

  // smooth zero density beyond the truncation height
  auto dens = [&](double u) { return selberg_r(p, u) * (logq + re_psi(c, u)); };
  double tail = 0.0;
  const double far_hi = T0 + kFar, far_lo = T0 - kFar;
  if (H < far_hi) {
    auto r = oscillatory_integral(dens, H, far_hi, period, {}, 1e-11);
    tail += r.value;
    out.error += r.abs_error;
  }
  if (-H > far_lo) {
    auto r = oscillatory_integral(dens, far_lo, -H, period, {}, 1e-11);
    tail += r.value;
    out.error += r.abs_error;
  }
  for (double s : {1.0, -1.0}) {
    const double start = std::max(kFar, s > 0 ? H - T0 : H + T0);
    auto far = far_integral(
        [&](double y) { return averaged_r(p, y) * (logq + re_psi(c, T0 + s * y)); }, start, 1e-12);
    tail += far.value;
    out.error += far.abs_error;
  }
  out.density_tail = tail / (2.0 * kPi);
  out.error /= 2.0 * kPi;

  std::lock_guard lock(mutex);
  memo.emplace(key, out);
  return out;
}

double derivative_constant() {
  static const double A = 1.25 * derivative_decay_constant(2.0);
  return A;
}

// Bound on |sum_{|gamma|>H} f(gamma) - \int_{|u|>H} f density| by partial summation against
// S(t) with the envelope |S(t)| <= 2 log(q(|t|+1)).
double truncation_bound(const ExtremalParams& p, std::uint32_t q, double H) {
  const double A = derivative_constant();
  const double d = p.delta, h = p.half_length, T0 = p.center_T0;
  auto senv = [&](double t) { return kSEnvelope * std::log(q * (std::abs(t) + 1.0)); };
  double total = 0.0;
  for (double s : {1.0, -1.0}) {
    const double dist = H - s * T0 - h;  // distance from u = sH to the interval
    if (dist * d < 2.0) return std::numeric_limits<double>::infinity();
    total += std::abs(selberg_r(p, s * H)) * senv(H);
    auto fprime = [&](double t) {
      const double e1 = t - s * T0 - h, e2 = t - s * T0 + h;
      return senv(t) * A / (2.0 * d) * (1.0 / (e1 * e1) + 1.0 / (e2 * e2));
    };
    total += far_integral(fprime, H, 1e-10).value * 1.0001;
  }
  return total;
}

// Prime terms depend only on the parameters; reused across characters and moduli.
const PrimeSumTerms& cached_terms(const ExtremalParams& p) {
  static std::mutex mutex;
  static std::map<std::tuple<double, double, double, int>, PrimeSumTerms> memo;
  const auto key = std::make_tuple(p.delta, p.center_T0, p.half_length, p.sign == Sign::plus);
  std::lock_guard lock(mutex);
  auto it = memo.find(key);
  if (it == memo.end()) {
    it = memo.emplace(key, prime_sum_terms(p)).first;
  }
  return it->second;
}

}  // namespace

ExplicitFormulaReport explicit_formula_check(const DirichletCharacter& chi,
                                             const ExtremalParams& p, double truncation_height,
                                             const ZeroSet& zeros) {
  if (chi.is_principal()) throw DomainError("explicit_formula_check: principal character");
  validate_prime_range(p);
  const std::uint32_t q = chi.modulus(), j = chi.index();
  if (zeros.q != q || zeros.height < truncation_height)
    throw CacheMissError("explicit_formula_check: zeros missing for q=" + std::to_string(q) +
                         " j=" + std::to_string(j) + " height=" +
                         std::to_string(truncation_height));
  ExplicitFormulaReport r;
  r.q = q;
  r.j = j;
  r.params = p;
  r.truncation_height = truncation_height;

  CompensatedSum zs;
  for (const auto& z : zeros.by_char[j]) {
    if (std::abs(z.gamma) > truncation_height) continue;
    zs += selberg_r(p, z.gamma);
    ++r.zeros_used;
  }
  r.zeros_sum = zs.value();
  const SmoothTerms st = smooth_terms(p, q, chi.gamma_shift(), truncation_height);
  r.density_tail = st.density_tail;
  r.zero_side = r.zeros_sum + r.density_tail;

  const TransformValue f0 = fourier_r(p, 0.0);
  r.main_term = f0.value.real() / (2.0 * kPi) * std::log(q / kPi);
  r.gamma_term = st.gamma_term;

  const PrimeSumTerms& terms = cached_terms(p);
  r.prime_term = kPrimeSumFactor * 2.0 * prime_sum(chi, terms);

  double weight = 0.0;
  for (std::size_t k = 0; k < terms.n.size(); ++k)
    weight += von_mangoldt(terms.n[k]) / std::sqrt(static_cast<double>(terms.n[k]));
  r.quadrature_error = st.error + f0.abs_error_bound * std::log(q / kPi) / (2.0 * kPi) +
                       2.0 * kPrimeSumFactor * weight * f0.abs_error_bound;
  r.residual = r.zero_side - (r.main_term + r.gamma_term - r.prime_term);
  r.tail_bound = truncation_bound(p, q, truncation_height);
  r.flagged = !(std::abs(r.residual) <= r.tail_bound + r.quadrature_error);
  return r;
}

ExplicitFormulaReport explicit_formula_check(const DirichletCharacter& chi,
                                             const ExtremalParams& p, double truncation_height,
                                             const ZeroCache& cache) {
  return explicit_formula_check(chi, p, truncation_height,
                                cache.require(chi.modulus(), truncation_height));
}

PrimeSumTerms prime_sum_terms(const ExtremalParams& p) {
  validate_prime_range(p);
  PrimeSumTerms t;
  const double top = std::exp(2.0 * kPi * p.delta);
  const auto limit = static_cast<std::uint64_t>(std::floor(top));
  for (const auto& pp : prime_powers(limit)) {
    const double l = std::log(static_cast<double>(pp.n)) / (2.0 * kPi);
    if (l >= p.delta) continue;
    t.n.push_back(pp.n);
    t.a.push_back(fourier_r(p, l).value * (pp.log_p / std::sqrt(static_cast<double>(pp.n))));
  }
  return t;
}

double prime_sum(const DirichletCharacter& chi, const PrimeSumTerms& terms) {
  CompensatedSum s;
  for (std::size_t k = 0; k < terms.n.size(); ++k)
    s += (chi(static_cast<std::int64_t>(terms.n[k])) * terms.a[k]).real();
  return s.value();
}

double prime_sum_mean(std::uint32_t q, const PrimeSumTerms& terms) {
  CompensatedSum s;
  for (std::size_t k = 0; k < terms.n.size(); ++k)
    s += static_cast<double>(orthogonality_sum(q, static_cast<std::int64_t>(terms.n[k]))) *
         terms.a[k].real();
  return s.value() / (q - 2.0);
}

double prime_sum_mean(std::uint32_t q, const ExtremalParams& p) {
  CharacterGroup check(q);  // validates q
  return prime_sum_mean(q, prime_sum_terms(p));
}

double prime_sum_mean_direct(std::uint32_t q, const PrimeSumTerms& terms) {
  const auto chars = enumerate_characters(q);
  CompensatedSum s;
  for (std::size_t j = 1; j < chars.size(); ++j) s += prime_sum(chars[j], terms);
  return s.value() / (q - 2.0);
}

PrimeSumSquare prime_sum_mean_square(std::uint32_t q, const PrimeSumTerms& terms,
                                     std::uint32_t direct_limit) {
  CharacterGroup group(q);
  std::vector<cplx> A(q, 0.0);
  for (std::size_t k = 0; k < terms.n.size(); ++k) A[terms.n[k] % q] += terms.a[k];
  cplx total = 0.0;
  CompensatedSum inv, eq;
  for (std::uint32_t r = 1; r < q; ++r) {
    total += A[r];
    inv += 0.5 * (A[r] * A[inverse_mod(r, q)]).real();
    eq += 0.5 * std::norm(A[r]);
  }
  PrimeSumSquare out;
  out.inverse_pairs = inv.value();
  out.equal_pairs = eq.value();
  const double qm1 = q - 1.0, qm2 = q - 2.0;
  out.expanded = (qm1 * (out.inverse_pairs + out.equal_pairs) - 0.5 * (total * total).real() -
                  0.5 * std::norm(total)) /
                 qm2;
  out.correction = out.expanded - qm1 / qm2 * (out.inverse_pairs + out.equal_pairs);
  out.direct = std::nan("");
  if (q <= direct_limit) {
    const auto chars = enumerate_characters(q);
    CompensatedSum s;
    for (std::size_t j = 1; j < chars.size(); ++j) {
      const double v = prime_sum(chars[j], terms);
      s += v * v;
    }
    out.direct = s.value() / qm2;
  }
  return out;
}

PrimeSumSquare prime_sum_mean_square(std::uint32_t q, const ExtremalParams& p,
                                     std::uint32_t direct_limit) {
  return prime_sum_mean_square(q, prime_sum_terms(p), direct_limit);
}

const std::vector<double>& default_betas() {
  static const std::vector<double> b{0.26, 0.3, 0.4, 0.5, 0.75, 1.0, 1.5, 2.0};
  return b;
}

namespace {

std::vector<double> sorted_betas(std::vector<double> betas) {
  if (betas.empty()) betas = default_betas();
  std::sort(betas.begin(), betas.end());
  for (double b : betas)
    if (!(b > 0.0)) throw DomainError("beta values must be positive");
  return betas;
}

const ZeroSet& zeros_for(ZeroCache& cache, std::uint32_t q, double height, bool extend) {
  if (!extend) return cache.require(q, height);
  return cache.ensure_lowest(q, height);
}

double window_count(const std::vector<ZeroRecord>& zs, double lo, double hi) {
  double n = 0.0;
  for (const auto& z : zs) {
    if (z.gamma > lo + z.abs_tolerance && z.gamma < hi - z.abs_tolerance) n += 1.0;
    else if (std::abs(z.gamma - lo) <= z.abs_tolerance || std::abs(z.gamma - hi) <= z.abs_tolerance)
      n += 0.5;
  }
  return n;
}

EnsembleStats window_stats(std::uint32_t q, double T0, double h, const std::vector<double>& betas_in,
                           ZeroCache& cache, bool extend) {
  if (!(h > 0.0)) throw DomainError("ensemble_stats: T (or h) must be positive");
  const auto betas = sorted_betas(betas_in);
  const double logq = std::log(static_cast<double>(q));
  const double need = std::abs(T0) + std::max(h, 2.0 * kPi * betas.back() / logq) + 0.25;
  const ZeroSet& set = zeros_for(cache, q, need, extend);
  const LFamily family(q);
  const auto s_hi = family_s_values(family, T0 + h);
  const auto s_lo = family_s_values(family, T0 - h);
  const double gam[2] = {psi_integral_exact(0.25, T0 - h, T0 + h) / (2.0 * kPi),
                         psi_integral_exact(0.75, T0 - h, T0 + h) / (2.0 * kPi)};
  const double smooth = h / kPi * std::log(q / kPi);

  EnsembleStats st;
  st.q = q;
  st.T = h;
  st.T0 = T0;
  st.characters = q - 2;
  CompensatedSum m1, m2, mc, mg, central;
  st.lowest_zero_min = std::numeric_limits<double>::infinity();
  st.lowest_zero_max = 0.0;
  for (std::uint32_t j = 1; j + 1 < q; ++j) {
    const double ts = s_hi.s[j] - s_lo.s[j];
    st.tilde_s.push_back(ts);
    m1 += ts;
    m2 += ts * ts;
    const auto& zs = set.by_char[j];
    const int a = LFamily::gamma_shift(j);
    const double n = window_count(zs, T0 - h, T0 + h);
    mc += n;
    mg += gam[a];
    st.count_identity_residual =
        std::max(st.count_identity_residual, std::abs(n - (smooth + ts + gam[a])));
    double nearest = std::numeric_limits<double>::infinity();
    int at_center = 0;
    for (const auto& z : zs) {
      const double dist = std::abs(z.gamma - T0);
      if (dist <= z.abs_tolerance) ++at_center;
      else nearest = std::min(nearest, dist);
    }
    if (T0 == 0.0 && set.central_flag[j]) at_center = std::max(at_center, 1);
    central += at_center;
    if (!std::isfinite(nearest))
      throw CacheMissError("no zero on record for q=" + std::to_string(q) + " j=" +
                           std::to_string(j) + " height=" + std::to_string(set.height));
    const double normalised = nearest * logq / (2.0 * kPi);
    st.lowest_zero.push_back(normalised);
    st.lowest_zero_min = std::min(st.lowest_zero_min, normalised);
    st.lowest_zero_max = std::max(st.lowest_zero_max, normalised);
  }
  const double count = q - 2.0;
  st.mean_tilde_s = m1.value() / count;
  st.mean_square_tilde_s = m2.value() / count;
  st.mean_count = mc.value() / count;
  st.mean_gamma_term = mg.value() / count;
  st.central_order_mean = central.value() / count;
  for (double b : betas) {
    std::size_t hit = 0;
    for (double v : st.lowest_zero) hit += v < b;
    st.proportion.emplace_back(b, hit / count);
  }
  return st;
}

}  // namespace

EnsembleStats ensemble_stats(std::uint32_t q, double T, const std::vector<double>& betas,
                             ZeroCache& cache, bool extend) {
  return window_stats(q, 0.0, T, betas, cache, extend);
}

EnsembleStats shifted_ensemble_stats(std::uint32_t q, double T0, double h,
                                     const std::vector<double>& betas, ZeroCache& cache,
                                     bool extend) {
  return window_stats(q, T0, h, betas, cache, extend);
}

OscillationReport oscillation_report(double T0, double beta, const std::vector<std::uint32_t>& qs) {
  if (!(beta > 0.0)) throw DomainError("oscillation_report: beta must be positive");
  OscillationReport rep;
  rep.T0 = T0;
  rep.beta = beta;
  CompensatedSum vm, um;
  for (std::uint32_t q : qs) {
    CharacterGroup check(q);
    OscillationRow row;
    row.q = q;
    const double logq = std::log(static_cast<double>(q));
    row.delta = logq / (2.0 * kPi);
    const double lo = std::log(2.0) / logq;
    double base = 0.0, weighted = 0.0, re2 = 0.0, full = 0.0;
    for (Sign s : {Sign::plus, Sign::minus}) {
      const ExtremalParams unit{1.0, 0.0, beta, s};
      base += transform_square_integral(unit, lo, 1.0);
      auto f = [&](double u) {
        const double v = fourier_r(unit, u).value.real();
        const double c = std::cos(2.0 * kPi * T0 * row.delta * u);
        return u * c * c * v * v;
      };
      weighted += integrate_adaptive(f, lo, 1.0, 1e-10).value;
      const ExtremalParams shifted{row.delta, T0, 2.0 * kPi * beta / logq, s};
      const double a = std::log(2.0) / (2.0 * kPi);
      re2 += transform_square_integral(shifted, a, row.delta, SquareWeight::u_re2);
      full += transform_square_integral(shifted, a, row.delta, SquareWeight::u);
    }
    const double c = std::cos(2.0 * kPi * T0 * row.delta);
    row.verbatim_ratio = c * c;
    row.u_dependent_ratio = weighted / base;
    row.direct_ratio = re2 / full;
    vm += row.verbatim_ratio;
    um += row.u_dependent_ratio;
    rep.rows.push_back(row);
  }
  if (!qs.empty()) {
    rep.verbatim_mean = vm.value() / qs.size();
    rep.u_dependent_mean = um.value() / qs.size();
  }
  return rep;
}

PrimeMeanEnvelope prime_mean_envelope(const std::vector<std::uint32_t>& qs, const ExtremalParams& p) {
  PrimeMeanEnvelope env;
  const PrimeSumTerms terms = prime_sum_terms(p);
  for (std::uint32_t q : qs) {
    CharacterGroup check(q);
    const double v = prime_sum_mean(q, terms);
    const double shape = std::exp(kPi * p.delta) / (q * p.delta);
    env.qs.push_back(q);
    env.values.push_back(v);
    env.ratios.push_back(std::abs(v) / shape);
    env.constant = std::max(env.constant, std::abs(v) / shape);
  }
  return env;
}

MeanSquareFit mean_square_fit(const std::vector<std::uint32_t>& qs,
                              const std::vector<double>& deltas, const std::vector<double>& Ts) {
  MeanSquareFit out;
  for (double d : deltas)
    for (double T : Ts)
      for (Sign s : {Sign::plus, Sign::minus}) {
        const ExtremalParams p{d, 0.0, T, s};
        const PrimeSumTerms terms = prime_sum_terms(p);
        const double lo = std::log(2.0) / (2.0 * kPi);
        const double I = lo < d ? transform_square_integral(p, lo, d) : 0.0;
        for (std::uint32_t q : qs) {
          const double ceil_ratio = std::ceil(std::exp(2.0 * kPi * d) / q * (1.0 - 1e-12));
          MeanSquareFitRow row{q, d, T, s, 0, 0, 0, 0};
          row.value = prime_sum_mean_square(q, terms, 0).expanded;
          row.main = ceil_ratio * 2.0 * kPi * kPi * I;
          row.shape_1 = ceil_ratio * std::min(1.0, T * T + 1.0 / (d * d));
          row.shape_2 = std::exp(2.0 * kPi * d) / (q * std::sqrt(d));
          out.rows.push_back(row);
        }
      }
  Eigen::MatrixXd A(out.rows.size(), 2);
  Eigen::VectorXd b(out.rows.size());
  for (std::size_t i = 0; i < out.rows.size(); ++i) {
    A(i, 0) = out.rows[i].shape_1;
    A(i, 1) = out.rows[i].shape_2;
    b[i] = out.rows[i].value - out.rows[i].main;
  }
  out.fit = fit_nonnegative(A, b);
  return out;
}

}  // namespace dlarg
