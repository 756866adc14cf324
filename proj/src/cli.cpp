#include "dlarg/cli.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dlarg/analysis.hpp"
#include "dlarg/arith.hpp"
#include "dlarg/bounds.hpp"
#include "dlarg/error.hpp"
#include "dlarg/extremal.hpp"
#include "dlarg/lfunc.hpp"
#include "dlarg/zero_cache.hpp"

namespace dlarg {

namespace {

constexpr double kPi = std::numbers::pi;

Json opt(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

void require_qs(const RunConfig& cfg) {
  if (cfg.qs.empty()) throw DomainError(cfg.command + ": no modulus given (--q or --q-range)");
}

void check_modulus(std::uint32_t q) {
  if (q < 3 || !is_prime(q))
    throw DomainError("modulus q=" + std::to_string(q) + " is not an odd prime");
}

Report start(const RunConfig& cfg) {
  Report r;
  r.command = cfg.command;
  r.config = cfg.echo();
  return r;
}

std::vector<double> list_or(const std::optional<double>& v, std::vector<double> fallback) {
  if (v) return {*v};
  return fallback;
}

const std::vector<double> kStatsBetas{0.3, 0.5, 1.0};

}  // namespace

Json RunConfig::echo() const {
  Json j = Json::object();
  j["q"] = qs;
  j["t"] = opt(T);
  j["t0"] = opt(T0);
  j["h"] = opt(h);
  j["delta"] = opt(delta);
  j["beta"] = betas;
  j["height"] = opt(height);
  j["delta_cap"] = delta_cap;
  j["tolerance"] = tolerance;
  if (!bound.empty()) j["bound"] = bound;
  if (command == "crossings") {
    j["pair"] = pair;
    j["lo"] = lo;
    j["hi"] = hi;
  }
  return j;
}

std::vector<std::uint32_t> primes_in_range(std::uint32_t lo, std::uint32_t hi) {
  if (hi < lo) throw DomainError("empty modulus range");
  std::vector<std::uint32_t> out;
  for (std::uint32_t q = std::max<std::uint32_t>(lo, 3); q <= hi; ++q)
    if (is_prime(q)) out.push_back(q);
  return out;
}

RunResult run_zeros(const RunConfig& cfg) {
  require_qs(cfg);
  const double H = cfg.height.value_or(10.0);
  if (!(H > 0.0)) throw DomainError("zeros: height must be positive");
  ZeroCache cache(cfg.cache_dir);
  RunResult res{start(cfg), 0};
  Table& t = res.report.table("zeros", {"q", "j", "parity", "count", "min_abs_gamma"});
  Table& errs = res.report.table("errors", {"q", "message"});
  for (std::uint32_t q : cfg.qs) {
    try {
      check_modulus(q);
      const ZeroSet& set = cache.ensure(q, H);
      for (std::uint32_t j = 1; j + 1 < q; ++j) {
        std::size_t n = 0;
        double lowest = INFINITY;
        for (const auto& z : set.by_char[j]) {
          if (std::abs(z.gamma) >= H) continue;
          ++n;
          lowest = std::min(lowest, std::abs(z.gamma));
        }
        t.add({q, j, j % 2 ? "odd" : "even", n, or_null(lowest)});
      }
    } catch (const DomainError& e) {
      errs.add({q, e.what()});
      res.exit_code = 2;
    }
  }
  return res;
}

RunResult run_stats(const RunConfig& cfg) {
  require_qs(cfg);
  ZeroCache cache(cfg.cache_dir);
  RunResult res{start(cfg), 0};
  Table& t = res.report.table(
      "ensemble", {"q", "T", "T0", "characters", "mean_tilde_s", "mean_square_tilde_s",
                   "lowest_zero_min", "lowest_zero_max", "central_order_mean", "mean_count",
                   "count_identity_residual", "thm1_bound", "thm2_bound", "thm2_delta",
                   "mean_within_thm1", "mean_square_within_thm2"});
  Table& p = res.report.table("proportion", {"q", "T", "beta", "fraction"});
  for (std::uint32_t q : cfg.qs) {
    check_modulus(q);
    const double logq = std::log(static_cast<double>(q));
    std::vector<double> Ts;
    if (cfg.T) Ts.push_back(*cfg.T);
    else
      for (double b : kStatsBetas) Ts.push_back(2.0 * kPi * b / logq);
    for (double T : Ts) {
      const double T0 = cfg.T0.value_or(0.0);
      const EnsembleStats st = cfg.T0 ? shifted_ensemble_stats(q, T0, cfg.h.value_or(T), cfg.betas, cache)
                                      : ensemble_stats(q, T, cfg.betas, cache);
      const double d = cfg.delta.value_or(std::min(logq / (2.0 * kPi), cfg.delta_cap));
      const BoundReport b1 = thm1_bound(q, st.T);
      const BoundReport b2 = thm2_bound(q, st.T, d);
      t.add({q, st.T, st.T0, st.characters, st.mean_tilde_s, st.mean_square_tilde_s,
             st.lowest_zero_min, st.lowest_zero_max, st.central_order_mean, st.mean_count,
             st.count_identity_residual, b1.value, b2.value, d,
             std::abs(st.mean_tilde_s) <= b1.value, st.mean_square_tilde_s <= b2.value});
      for (const auto& [beta, frac] : st.proportion) p.add({q, st.T, beta, frac});
      if (st.count_identity_residual > 1e-6) res.exit_code = 3;
    }
  }
  return res;
}

RunResult run_report(const RunConfig& cfg) {
  RunResult res{start(cfg), 0};
  std::vector<double> betas = cfg.betas;
  if (betas.empty())
    for (int k = 0; k <= 56; ++k) betas.push_back(0.2 + 0.05 * k);
  Table& t = res.report.table("bounds", {"beta", "cor2", "hr", "zhao", "shifted"});
  for (double b : betas) {
    auto guard = [&](auto f) -> Json {
      try {
        return f();
      } catch (const DomainError&) {
        return nullptr;
      }
    };
    t.add({b, guard([&] { return Json(cor2_lower_bound(b).value); }),
           guard([&] { return Json(hr_bound(b)); }), guard([&] { return Json(zhao_bound(b)); }),
           guard([&] { return Json(shifted_cor_bound(b).value); })});
  }
  Table& c = res.report.table("crossings", {"f", "g", "lo", "hi", "beta"});
  const std::vector<std::pair<std::string, std::string>> pairs{
      {"zhao", "cor2"}, {"hr", "zero"}, {"zhao", "shifted"}};
  for (const auto& [f, g] : pairs) {
    Json root = nullptr;
    try {
      root = crossing_finder(f, g, 0.51, 0.9);
    } catch (const NotFoundError&) {
    }
    c.add({f, g, 0.51, 0.9, root});
  }
  const ZhaoConstants& z = zhao_constants();
  Table& k = res.report.table("constants", {"name", "value"});
  k.add({"zhao_switch_beta", z.switch_beta});
  k.add({"zhao_c", z.c});
  k.add({"hr_limit", hr_bound(1e4)});
  const RoughEstimate re = rough_integral_estimate(1.0);
  k.add({"rough_estimate_offset_beta_1", re.offset});
  return res;
}

RunResult run_explicit_check(const RunConfig& cfg) {
  std::vector<std::uint32_t> qs = cfg.qs.empty() ? std::vector<std::uint32_t>{5, 7, 11, 31} : cfg.qs;
  const double H = cfg.height.value_or(40.0);
  const double T0 = cfg.T0.value_or(0.0);
  ZeroCache cache(cfg.cache_dir);
  RunResult res{start(cfg), 0};
  Table& t = res.report.table(
      "explicit_formula",
      {"q", "j", "delta", "T", "T0", "sign", "zero_side", "main_term", "gamma_term", "prime_term",
       "residual", "tail_bound", "quadrature_error", "zeros_used", "flagged"});
  std::vector<double> abs_res;
  std::size_t flagged = 0;
  for (std::uint32_t q : qs) {
    check_modulus(q);
    const ZeroSet& set = cache.ensure(q, H);
    const auto chars = enumerate_characters(q);
    for (double d : list_or(cfg.delta, {0.5, 1.0}))
      for (double T : list_or(cfg.h ? cfg.h : cfg.T, {0.3, 1.0}))
        for (Sign s : {Sign::plus, Sign::minus})
          for (std::size_t j = 1; j < chars.size(); ++j) {
            ExtremalParams p{d, T0, T, s, cfg.delta_cap};
            const auto r = explicit_formula_check(chars[j], p, H, set);
            t.add({q, j, d, T, T0, sign_name(s), r.zero_side, r.main_term, r.gamma_term,
                   r.prime_term, r.residual, r.tail_bound, r.quadrature_error, r.zeros_used,
                   r.flagged});
            abs_res.push_back(std::abs(r.residual));
            flagged += r.flagged;
          }
  }
  std::sort(abs_res.begin(), abs_res.end());
  Table& s = res.report.table("summary", {"cases", "flagged", "median_abs_residual", "max_abs_residual"});
  const double median = abs_res.empty() ? NAN
                        : abs_res.size() % 2 ? abs_res[abs_res.size() / 2]
                                             : 0.5 * (abs_res[abs_res.size() / 2 - 1] + abs_res[abs_res.size() / 2]);
  s.add({abs_res.size(), flagged, or_null(median), abs_res.empty() ? Json(nullptr) : Json(abs_res.back())});
  if (flagged) res.exit_code = 3;
  return res;
}

RunResult run_extremal(const RunConfig& cfg) {
  const double d = cfg.delta.value_or(1.0);
  const double T0 = cfg.T0.value_or(0.0);
  const double h = cfg.h.value_or(cfg.T.value_or(1.0));
  RunResult res{start(cfg), 0};
  Table& v = res.report.table("values", {"x", "indicator", "r_plus", "r_minus"});
  Table& f = res.report.table("transform", {"u", "plus_re", "plus_im", "minus_re", "minus_im",
                                            "error_bound"});
  Table& c = res.report.table("constants", {"sign", "growth", "decay", "leading", "u_transform"});
  const ExtremalParams pp{d, T0, h, Sign::plus, cfg.delta_cap};
  const ExtremalParams pm{d, T0, h, Sign::minus, cfg.delta_cap};
  validate(pp);
  const double span = h + 4.0 / d;
  for (int k = 0; k <= 80; ++k) {
    const double x = T0 - span + 2.0 * span * k / 80;
    v.add({x, interval_indicator(pp, x), selberg_r(pp, x), selberg_r(pm, x)});
  }
  for (int k = 0; k <= 24; ++k) {
    const double u = d * k / 20.0;
    const TransformValue a = fourier_r(pp, u), b = fourier_r(pm, u);
    f.add({u, a.value.real(), a.value.imag(), b.value.real(), b.value.imag(),
           std::max(a.abs_error_bound, b.abs_error_bound)});
  }
  for (const auto& p : {pp, pm}) {
    const ExtremalConstants k = extremal_constants(p);
    c.add({sign_name(p.sign), k.growth, k.decay, k.leading, k.u_transform});
  }
  return res;
}

RunResult run_proportion(const RunConfig& cfg) {
  require_qs(cfg);
  ZeroCache cache(cfg.cache_dir);
  RunResult res{start(cfg), 0};
  Table& t = res.report.table("proportion", {"q", "T0", "beta", "fraction", "cor2", "shifted",
                                             "hr", "zhao"});
  const auto betas = cfg.betas.empty() ? default_betas() : cfg.betas;
  auto maybe = [](auto f) -> Json {
    try {
      return f();
    } catch (const DomainError&) {
      return nullptr;
    }
  };
  for (std::uint32_t q : cfg.qs) {
    check_modulus(q);
    const double logq = std::log(static_cast<double>(q));
    const double T = cfg.T.value_or(2.0 * kPi * 0.5 / logq);
    const EnsembleStats st = cfg.T0 ? shifted_ensemble_stats(q, *cfg.T0, cfg.h.value_or(T), betas, cache)
                                    : ensemble_stats(q, T, betas, cache);
    for (const auto& [b, frac] : st.proportion)
      t.add({q, st.T0, b, frac, maybe([&] { return Json(cor2_lower_bound(b).value); }),
             maybe([&] { return Json(shifted_cor_bound(b).value); }),
             maybe([&] { return Json(hr_bound(b)); }), maybe([&] { return Json(zhao_bound(b)); })});
  }
  if (cfg.T0) {
    Table& o = res.report.table("oscillation", {"q", "beta", "delta", "verbatim_ratio",
                                                "u_dependent_ratio", "direct_ratio"});
    for (double b : betas) {
      const OscillationReport rep = oscillation_report(*cfg.T0, b, cfg.qs);
      for (const auto& r : rep.rows)
        o.add({r.q, b, r.delta, r.verbatim_ratio, r.u_dependent_ratio, r.direct_ratio});
    }
  }
  return res;
}

RunResult run_bounds(const RunConfig& cfg) {
  RunResult res{start(cfg), 0};
  const std::string& id = cfg.bound;
  Table& comp = res.report.table("components", {"bound", "q", "T", "beta", "name", "value", "label"});
  Table& tot = res.report.table("values", {"bound", "q", "T", "delta", "beta", "value"});
  auto emit = [&](const BoundReport& r, Json q, Json T, Json d, Json b) {
    for (const auto& c : r.components) comp.add({r.name, q, T, b, c.name, c.value, c.label});
    tot.add({r.name, q, T, d, b, r.value});
  };
  if (id == "thm1" || id == "thm2") {
    require_qs(cfg);
    if (!cfg.T) throw DomainError("bounds: --t is required for " + id);
    for (std::uint32_t q : cfg.qs) {
      check_modulus(q);
      if (id == "thm1") {
        emit(thm1_bound(q, *cfg.T), q, *cfg.T, nullptr, nullptr);
      } else {
        const double d = cfg.delta.value_or(std::min(std::log(q) / (2.0 * kPi), cfg.delta_cap));
        emit(thm2_bound(q, *cfg.T, d), q, *cfg.T, d, nullptr);
      }
    }
  } else if (id == "cor2" || id == "shifted" || id == "hr" || id == "zhao") {
    if (cfg.betas.empty()) throw DomainError("bounds: --beta is required for " + id);
    for (double b : cfg.betas) {
      if (id == "cor2") emit(cor2_lower_bound(b), nullptr, nullptr, nullptr, b);
      else if (id == "shifted") emit(shifted_cor_bound(b), nullptr, nullptr, nullptr, b);
      else tot.add({id, nullptr, nullptr, nullptr, b, evaluate_bound(id, b)});
    }
  } else {
    throw DomainError("bounds: unknown --bound '" + id + "'");
  }
  return res;
}

RunResult run_crossings(const RunConfig& cfg) {
  RunResult res{start(cfg), 0};
  const auto comma = cfg.pair.find(',');
  if (comma == std::string::npos) throw DomainError("crossings: --pair expects f,g");
  const std::string f = cfg.pair.substr(0, comma), g = cfg.pair.substr(comma + 1);
  Table& t = res.report.table("crossings", {"f", "g", "lo", "hi", "beta"});
  t.add({f, g, cfg.lo, cfg.hi, crossing_finder(f, g, cfg.lo, cfg.hi)});
  return res;
}

RunResult run(const RunConfig& cfg) {
  const std::string& c = cfg.command;
  if (c == "zeros") return run_zeros(cfg);
  if (c == "stats") return run_stats(cfg);
  if (c == "report") return run_report(cfg);
  if (c == "explicit-check") return run_explicit_check(cfg);
  if (c == "extremal") return run_extremal(cfg);
  if (c == "proportion") return run_proportion(cfg);
  if (c == "bounds") return run_bounds(cfg);
  if (c == "crossings") return run_crossings(cfg);
  throw DomainError("unknown command '" + c + "'");
}

}  // namespace dlarg
