#include "dlarg/lfunc.hpp"

#include <algorithm>
#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "dlarg/error.hpp"
#include "dlarg/parallel.hpp"
#include "dlarg/specialfn.hpp"

namespace dlarg {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kImagLimit = 1e-6;
constexpr double kJumpThreshold = 1e-10;
constexpr double kJumpOffset = 1e-7;
constexpr double kSigmaFloor = 1e-6;

// 10 -> 3 by 1, 3 -> 1.5 by 1/4, 1.5 -> 1/2 by 1/20.
const std::vector<double>& sigma_grid() {
  static const std::vector<double> grid = [] {
    std::vector<double> g;
    for (int k = 10; k > 3; --k) g.push_back(k);
    for (int k = 12; k > 6; --k) g.push_back(k / 4.0);
    for (int k = 30; k >= 10; --k) g.push_back(k / 20.0);
    return g;
  }();
  return grid;
}

double arg_increment(const std::function<cplx(double)>& f, double s0, cplx v0, double s1, cplx v1,
                     double limit, double floor) {
  if (v0 == 0.0 || v1 == 0.0) throw TrackingError("argument tracking hit an exact zero");
  const double d = std::arg(v1 / v0);
  if (std::abs(d) <= limit) return d;
  if (std::abs(s1 - s0) < floor)
    throw TrackingError("argument tracking: step below floor near " + std::to_string(s0) +
                        " with increment " + std::to_string(d));
  const double sm = 0.5 * (s0 + s1);
  const cplx vm = f(sm);
  return arg_increment(f, s0, v0, sm, vm, limit, floor) +
         arg_increment(f, sm, vm, s1, v1, limit, floor);
}

// Argument of L(sigma + iT, chi_j) accumulated from sigma = 10 down to 1/2, given the
// values on sigma_grid().
double track_down(const LFamily& fam, double T, std::uint32_t j, const std::vector<cplx>& vals) {
  const auto& grid = sigma_grid();
  auto f = [&](double sigma) { return fam.value(cplx(sigma, T), j); };
  double total = std::arg(vals[0]);
  for (std::size_t i = 0; i + 1 < grid.size(); ++i)
    total += arg_increment(f, grid[i], vals[i], grid[i + 1], vals[i + 1], kPi / 2, kSigmaFloor);
  return total;
}

double s_single(const LFamily& fam, double T, std::uint32_t j, bool* jump);

double s_from_values(const LFamily& fam, double T, std::uint32_t j, const std::vector<cplx>& vals,
                     bool* jump) {
  if (std::abs(vals.back()) < kJumpThreshold) {
    if (jump) *jump = true;
    return 0.5 * (s_single(fam, T + kJumpOffset, j, nullptr) +
                  s_single(fam, T - kJumpOffset, j, nullptr));
  }
  if (jump) *jump = false;
  return track_down(fam, T, j, vals) / kPi;
}

double s_single(const LFamily& fam, double T, std::uint32_t j, bool* jump) {
  const auto& grid = sigma_grid();
  std::vector<cplx> vals(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) vals[i] = fam.value(cplx(grid[i], T), j);
  return s_from_values(fam, T, j, vals, jump);
}

void require_nonprincipal(const DirichletCharacter& chi, const char* what) {
  if (chi.is_principal()) throw DomainError(std::string(what) + ": principal character");
}

double checked_real(const cplx& z, std::uint32_t q, std::uint32_t j, double t) {
  if (std::abs(z.imag()) > kImagLimit)
    throw NumericalError("rotated L-value not real: q=" + std::to_string(q) + " j=" +
                         std::to_string(j) + " t=" + std::to_string(t) +
                         " imag=" + std::to_string(z.imag()));
  return z.real();
}

// Shared cores for the family and single-character entry points.
struct Selection {
  const LFamily& fam;
  std::vector<std::uint32_t> js;
  bool batch;
};

std::vector<double> s_values_for(const Selection& sel, double T, std::vector<char>* jumps) {
  const auto& grid = sigma_grid();
  std::vector<std::vector<cplx>> per_char(sel.js.size(), std::vector<cplx>(grid.size()));
  if (sel.batch) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const auto v = sel.fam.values(cplx(grid[i], T));
      for (std::size_t k = 0; k < sel.js.size(); ++k) per_char[k][i] = v[sel.js[k]];
    }
  } else {
    for (std::size_t k = 0; k < sel.js.size(); ++k)
      for (std::size_t i = 0; i < grid.size(); ++i)
        per_char[k][i] = sel.fam.value(cplx(grid[i], T), sel.js[k]);
  }
  std::vector<double> s(sel.js.size());
  if (jumps) jumps->assign(sel.js.size(), 0);
  parallel_for(sel.js.size(), [&](std::size_t k) {
    bool jump = false;
    s[k] = s_from_values(sel.fam, T, sel.js[k], per_char[k], &jump);
    if (jumps) (*jumps)[k] = jump;
  });
  return s;
}

std::vector<double> rotated_for(const Selection& sel, double t) {
  std::vector<double> out(sel.js.size());
  const std::uint32_t q = sel.fam.modulus();
  if (sel.batch) {
    const auto v = sel.fam.rotated(t);
    for (std::size_t k = 0; k < sel.js.size(); ++k)
      out[k] = checked_real(v[sel.js[k]], q, sel.js[k], t);
  } else {
    for (std::size_t k = 0; k < sel.js.size(); ++k)
      out[k] = checked_real(sel.fam.rotated(t, sel.js[k]), q, sel.js[k], t);
  }
  return out;
}

int sign_of(double x) { return x < 0.0 ? -1 : 1; }

std::vector<std::pair<double, double>> brackets_on(const std::vector<double>& ts,
                                                   const std::vector<double>& zs) {
  std::vector<std::pair<double, double>> b;
  for (std::size_t i = 0; i + 1 < ts.size(); ++i)
    if (sign_of(zs[i]) != sign_of(zs[i + 1])) b.emplace_back(ts[i], ts[i + 1]);
  return b;
}

std::vector<double> grid_points(double lo, double hi, std::size_t m) {
  std::vector<double> ts(m + 1);
  for (std::size_t i = 0; i <= m; ++i) ts[i] = lo + (hi - lo) * static_cast<double>(i) / m;
  ts[m] = hi;
  return ts;
}

FamilyZeros find_zeros_core(const Selection& sel, double t_lo, double t_hi,
                            const ScanOptions& opt) {
  if (!(t_lo < t_hi)) throw DomainError("find_zeros: empty window");
  const LFamily& fam = sel.fam;
  const std::uint32_t q = fam.modulus();
  FamilyZeros out;
  out.q = q;
  out.g = fam.generator();
  out.t_lo = t_lo;
  out.t_hi = t_hi;
  out.zeros.assign(fam.size(), {});
  out.central_flag.assign(fam.size(), 0);
  const std::size_t nsel = sel.js.size();

  // expected counts from the argument principle
  const auto s_hi = s_values_for(sel, t_hi, nullptr);
  const auto s_lo = s_values_for(sel, t_lo, nullptr);
  const double th_hi[2] = {fam.theta(t_hi, 0), fam.theta(t_hi, 1)};
  const double th_lo[2] = {fam.theta(t_lo, 0), fam.theta(t_lo, 1)};
  std::vector<long> expected(nsel);
  for (std::size_t k = 0; k < nsel; ++k) {
    const int a = LFamily::gamma_shift(sel.js[k]);
    const double n = (th_hi[a] - th_lo[a]) / kPi + s_hi[k] - s_lo[k];
    if (std::abs(n - std::round(n)) > 1e-4)
      throw NumericalError("argument-principle count not integral: q=" + std::to_string(q) +
                           " j=" + std::to_string(sel.js[k]) + " count=" + std::to_string(n));
    expected[k] = std::lround(n);
  }

  const double T = std::max(std::abs(t_lo), std::abs(t_hi));
  const double spacing = (2.0 * kPi / std::log(q * (T + 2.0))) / opt.samples_per_gap;
  const auto m = static_cast<std::size_t>(std::ceil((t_hi - t_lo) / spacing));
  const auto ts = grid_points(t_lo, t_hi, std::max<std::size_t>(m, 2));
  std::vector<std::vector<double>> zs(nsel, std::vector<double>(ts.size()));
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const auto z = rotated_for(sel, ts[i]);
    for (std::size_t k = 0; k < nsel; ++k) zs[k][i] = z[k];
  }

  parallel_for(nsel, [&](std::size_t k) {
    const std::uint32_t j = sel.js[k];
    auto brackets = brackets_on(ts, zs[k]);
    std::size_t level_m = ts.size() - 1;
    for (int r = 0; static_cast<long>(brackets.size()) != expected[k]; ++r) {
      if (r >= opt.max_rescans)
        throw MissingZeroError("q=" + std::to_string(q) + " j=" + std::to_string(j) +
                               ": " + std::to_string(brackets.size()) + " sign changes, " +
                               std::to_string(expected[k]) + " zeros by argument principle");
      level_m *= 2;
      const auto fine = grid_points(t_lo, t_hi, level_m);
      std::vector<double> fz(fine.size());
      for (std::size_t i = 0; i < fine.size(); ++i)
        fz[i] = checked_real(fam.rotated(fine[i], j), q, j, fine[i]);
      brackets = brackets_on(fine, fz);
    }
    auto f = [&](double t) { return fam.rotated(t, j).real(); };
    const double tol = opt.refine_tolerance;
    auto stop = [tol](double a, double b) { return std::abs(b - a) <= tol; };
    for (auto [a, b] : brackets) {
      std::uintmax_t iters = 200;
      const double fa = f(a), fb = f(b);
      double lo = a, hi = b;
      if (fa == 0.0) {
        hi = a;
      } else if (fb == 0.0) {
        lo = b;
      } else {
        auto r = boost::math::tools::toms748_solve(f, a, b, fa, fb, stop, iters);
        lo = r.first;
        hi = r.second;
      }
      out.zeros[j].push_back({q, fam.generator(), j, 0.5 * (lo + hi), tol});
    }
    if (t_lo < 0.0 && t_hi > 0.0 && std::abs(fam.rotated(0.0, j)) < 1e-10) out.central_flag[j] = 1;
  });
  return out;
}

std::vector<std::uint32_t> nonprincipal(const LFamily& fam) {
  std::vector<std::uint32_t> js;
  for (std::uint32_t j = 1; j < fam.size(); ++j) js.push_back(j);
  return js;
}

}  // namespace

LFamily::LFamily(std::uint32_t q) : LFamily(std::make_shared<const CharacterGroup>(q)) {}

LFamily::LFamily(std::shared_ptr<const CharacterGroup> group) : group_(std::move(group)) {
  const std::uint32_t n = group_->order();
  const double q = group_->modulus();
  shifts_.resize(n);
  for (std::uint32_t k = 0; k < n; ++k) shifts_[k] = group_->residue_at(k) / q;
  eps_.assign(n, cplx(1.0));
  inv_sqrt_eps_.assign(n, cplx(1.0));
  for (std::uint32_t j = 1; j < n; ++j) {
    eps_[j] = root_number(character(j)).epsilon;
    inv_sqrt_eps_[j] = 1.0 / std::sqrt(eps_[j]);
  }
}

std::vector<cplx> LFamily::hurwitz_vector(cplx s) const {
  std::vector<cplx> z(shifts_.size());
  if (s == cplx(1.0, 0.0)) {
    // poles cancel since sum chi(a) = 0; zeta(s,a) - 1/(s-1) -> -psi(a)
    for (std::size_t k = 0; k < z.size(); ++k) z[k] = -digamma(shifts_[k]);
    return z;
  }
  hurwitz_zeta_batch(s, shifts_, z);
  return z;
}

std::vector<cplx> LFamily::values(cplx s) const {
  const auto z = hurwitz_vector(s);
  const std::uint32_t n = size();
  const cplx scale = std::exp(-s * std::log(static_cast<double>(modulus())));
  std::vector<cplx> out(n);
  for (std::uint32_t j = 0; j < n; ++j) {
    double re = 0.0, im = 0.0;
    std::uint32_t m = 0;
    for (std::uint32_t k = 0; k < n; ++k) {
      const cplx& w = group_->root(m);
      re += w.real() * z[k].real() - w.imag() * z[k].imag();
      im += w.real() * z[k].imag() + w.imag() * z[k].real();
      m += j;
      if (m >= n) m -= n;
    }
    out[j] = scale * cplx(re, im);
  }
  return out;
}

cplx LFamily::value(cplx s, std::uint32_t j) const {
  const auto z = hurwitz_vector(s);
  const std::uint32_t n = size();
  cplx acc = 0.0;
  std::uint32_t m = 0;
  j %= n;
  for (std::uint32_t k = 0; k < n; ++k) {
    acc += group_->root(m) * z[k];
    m += j;
    if (m >= n) m -= n;
  }
  return std::exp(-s * std::log(static_cast<double>(modulus()))) * acc;
}

double LFamily::theta(double t, int a) const {
  const double q = modulus();
  return 0.5 * t * std::log(q / kPi) + log_gamma(cplx(0.25 + 0.5 * a, 0.5 * t)).imag();
}

std::vector<cplx> LFamily::rotated(double t) const {
  auto v = values(cplx(0.5, t));
  const cplx ph[2] = {std::polar(1.0, theta(t, 0)), std::polar(1.0, theta(t, 1))};
  v[0] = 0.0;
  for (std::uint32_t j = 1; j < size(); ++j) v[j] *= inv_sqrt_eps_[j] * ph[gamma_shift(j)];
  return v;
}

cplx LFamily::rotated(double t, std::uint32_t j) const {
  return inv_sqrt_eps_[j] * std::polar(1.0, theta(t, gamma_shift(j))) * value(cplx(0.5, t), j);
}

cplx l_value(cplx s, const DirichletCharacter& chi) {
  require_nonprincipal(chi, "l_value");
  if (s.real() < -2.0 || s.real() > 12.0 || std::abs(s.imag()) > 1e3)
    throw DomainError("l_value: s outside Re in [-2,12], |Im| <= 1e3");
  return LFamily(chi.group()).value(s, chi.index());
}

cplx completed_lambda(cplx s, const DirichletCharacter& chi) {
  const cplx L = l_value(s, chi);
  const double a = chi.gamma_shift();
  const cplx w = 0.5 * (s + a);
  const double q = chi.modulus();
  return std::exp(w * std::log(q / kPi) + log_gamma(w)) * L;
}

HardyZValue hardy_z_ex(double t, const DirichletCharacter& chi) {
  require_nonprincipal(chi, "hardy_z");
  const cplx inv_root = 1.0 / std::sqrt(root_number(chi).epsilon);
  const cplx lam = inv_root * completed_lambda(cplx(0.5, t), chi);
  const LFamily fam(chi.group());
  const cplx rot = fam.rotated(t, chi.index());
  HardyZValue out{lam.real(), lam.imag(), rot.real(), rot.imag()};
  checked_real(rot, chi.modulus(), chi.index(), t);
  return out;
}

ArgumentValue s_arg(double T, const DirichletCharacter& chi) {
  require_nonprincipal(chi, "s_arg");
  const LFamily fam(chi.group());
  bool jump_pos = false, jump_neg = false;
  ArgumentValue out;
  out.T = T;
  out.s_value = s_single(fam, T, chi.index(), &jump_pos);
  // S(T, conj chi) = -S(-T, chi)
  out.tilde_s = out.s_value - s_single(fam, -T, chi.index(), &jump_neg);
  out.at_jump = jump_pos || jump_neg;
  return out;
}

FamilyArguments family_s_values(const LFamily& family, double T) {
  Selection sel{family, nonprincipal(family), true};
  std::vector<char> jumps;
  const auto s = s_values_for(sel, T, &jumps);
  FamilyArguments out;
  out.T = T;
  out.s.assign(family.size(), std::nan(""));
  out.at_jump.assign(family.size(), 0);
  for (std::size_t k = 0; k < sel.js.size(); ++k) {
    out.s[sel.js[k]] = s[k];
    out.at_jump[sel.js[k]] = jumps[k];
  }
  return out;
}

double safe_height(const LFamily& family, double H) {
  for (int k = 0; k < 200; ++k) {
    const double h = H + k * 1e-6;
    const auto up = family.values(cplx(0.5, h));
    const auto dn = family.values(cplx(0.5, -h));
    bool ok = true;
    for (std::uint32_t j = 1; j < family.size() && ok; ++j)
      ok = std::abs(up[j]) > 1e-8 && std::abs(dn[j]) > 1e-8;
    if (ok) return h;
  }
  throw NumericalError("safe_height: no clear window end near " + std::to_string(H));
}

FamilyZeros find_zeros_family(const LFamily& family, double t_lo, double t_hi,
                              const ScanOptions& opt) {
  Selection sel{family, nonprincipal(family), true};
  return find_zeros_core(sel, t_lo, t_hi, opt);
}

std::vector<ZeroRecord> find_zeros(const DirichletCharacter& chi, double t_min, double t_max,
                                   const ScanOptions& opt) {
  require_nonprincipal(chi, "find_zeros");
  const LFamily fam(chi.group());
  Selection sel{fam, {chi.index()}, false};
  return std::move(find_zeros_core(sel, t_min, t_max, opt).zeros[chi.index()]);
}

double zero_count_formula(double T, std::uint32_t q, int gamma_shift, double tilde_s) {
  return T / kPi * std::log(q / kPi) + tilde_s + gamma_integral(gamma_shift, -T, T) / (2.0 * kPi);
}

ZeroCount count_zeros(double T, const DirichletCharacter& chi) {
  if (!(T > 0.0)) throw DomainError("count_zeros: T must be positive");
  require_nonprincipal(chi, "count_zeros");
  const LFamily fam(chi.group());
  const double H = T + 0.5;
  const auto zeros = find_zeros(chi, -H, H);
  ZeroCount out;
  for (const auto& z : zeros) {
    const double g = std::abs(z.gamma);
    if (g < T - z.abs_tolerance) out.from_zeros += 1.0;
    else if (g <= T + z.abs_tolerance) out.from_zeros += 0.5;
  }
  const auto sv = s_arg(T, chi);
  out.from_formula = zero_count_formula(T, chi.modulus(), chi.gamma_shift(), sv.tilde_s);
  if (std::abs(out.from_formula - out.from_zeros) >= 1e-6)
    throw NumericalError("count_zeros: sign-change count " + std::to_string(out.from_zeros) +
                         " vs formula " + std::to_string(out.from_formula));
  return out;
}

int rectangle_zero_count(const DirichletCharacter& chi, double sigma_lo, double sigma_hi,
                         double T) {
  require_nonprincipal(chi, "rectangle_zero_count");
  if (!(sigma_lo < sigma_hi) || !(T > 0.0)) throw DomainError("rectangle_zero_count: bad box");
  const LFamily fam(chi.group());
  const std::uint32_t j = chi.index();
  const cplx corners[5] = {{sigma_lo, -T}, {sigma_hi, -T}, {sigma_hi, T}, {sigma_lo, T},
                           {sigma_lo, -T}};
  double total = 0.0;
  for (int e = 0; e < 4; ++e) {
    const cplx a = corners[e], b = corners[e + 1];
    auto point = [&](double u) { return a + u * (b - a); };
    auto f = [&](double u) { return fam.value(point(u), j); };
    const int steps = std::max(4, static_cast<int>(std::ceil(std::abs(b - a) / 0.05)));
    cplx prev = f(0.0);
    for (int k = 1; k <= steps; ++k) {
      const double u0 = double(k - 1) / steps, u1 = double(k) / steps;
      const cplx cur = f(u1);
      total += arg_increment(f, u0, prev, u1, cur, kPi / 4, 1e-9);
      prev = cur;
    }
  }
  const double n = total / (2.0 * kPi);
  if (std::abs(n - std::round(n)) > 0.05)
    throw NumericalError("rectangle_zero_count: winding number not integral");
  return static_cast<int>(std::lround(n));
}

}  // namespace dlarg
