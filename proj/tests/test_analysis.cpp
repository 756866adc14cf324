#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dlarg/analysis.hpp"
#include "dlarg/arith.hpp"
#include "dlarg/error.hpp"
#include "dlarg/lfunc.hpp"

using namespace dlarg;

TEST_CASE("prime sum terms") {
  const ExtremalParams p{0.5, 0.0, 0.3, Sign::plus};
  const PrimeSumTerms t = prime_sum_terms(p);
  // n < e^{pi} = 23.14: 2 3 4 5 7 8 9 11 13 16 17 19 23
  CHECK(t.n.size() == 13);
  CHECK(t.n.back() == 23);
  // below e^{2 pi delta} < 2 there is nothing to sum
  CHECK(prime_sum_terms(ExtremalParams{0.1, 0.0, 0.3, Sign::plus}).n.empty());
}

TEST_CASE("orthogonality shortcut against the character loop") {
  for (Sign s : {Sign::plus, Sign::minus})
    for (std::uint32_t q : {5u, 7u, 13u, 31u}) {
      const PrimeSumTerms t = prime_sum_terms(ExtremalParams{1.0, 0.0, 0.5, s});
      CHECK(std::abs(prime_sum_mean(q, t) - prime_sum_mean_direct(q, t)) < 1e-10);
    }
}

TEST_CASE("mean square expansion against the character loop") {
  for (double T0 : {0.0, 2.0})
    for (std::uint32_t q : {5u, 11u, 29u}) {
      const PrimeSumSquare m = prime_sum_mean_square(q, ExtremalParams{1.1, T0, 0.4, Sign::minus});
      CHECK(std::abs(m.expanded - m.direct) < 1e-9);
      CHECK(m.expanded >= 0.0);
    }
}

TEST_CASE("explicit formula for a few characters") {
  ZeroCache cache;
  const ZeroSet& set = cache.ensure(7, 40.0);
  const auto chars = enumerate_characters(7);
  for (std::size_t j = 1; j < chars.size(); ++j)
    for (Sign s : {Sign::plus, Sign::minus}) {
      const auto r = explicit_formula_check(chars[j], ExtremalParams{1.0, 0.0, 0.3, s}, 40.0, set);
      CHECK(std::abs(r.residual) < 1e-3);
      CHECK(std::abs(r.residual) <= r.tail_bound);
      CHECK(!r.flagged);
      CHECK(r.zeros_used > 0);
    }
}

TEST_CASE("explicit formula needs zeros up to the truncation height") {
  ZeroCache cache;
  const ZeroSet& set = cache.ensure(5, 10.0);
  const auto chars = enumerate_characters(5);
  CHECK_THROWS_AS(explicit_formula_check(chars[1], ExtremalParams{}, 40.0, set), CacheMissError);
  CHECK_THROWS_AS(explicit_formula_check(chars[0], ExtremalParams{}, 5.0, set), DomainError);
}

TEST_CASE("ensemble statistics, q = 11") {
  ZeroCache cache;
  const double T = 0.4;
  const EnsembleStats st = ensemble_stats(11, T, {}, cache);
  CHECK(st.characters == 9);
  CHECK(st.tilde_s.size() == 9);
  CHECK(st.count_identity_residual < 1e-6);
  CHECK(st.central_order_mean == 0.0);
  // independent recount: S~ from s_arg, N from a direct zero scan
  const auto chars = enumerate_characters(11);
  double mean = 0.0;
  for (std::size_t j = 1; j < chars.size(); ++j) {
    const double ts = s_arg(T, chars[j]).s_value - s_arg(-T, chars[j]).s_value;
    CHECK(st.tilde_s[j - 1] == doctest::Approx(ts).epsilon(1e-9));
    mean += ts / 9.0;
  }
  CHECK(st.mean_tilde_s == doctest::Approx(mean).epsilon(1e-12));
  for (std::size_t k = 1; k < st.proportion.size(); ++k)
    CHECK(st.proportion[k - 1].second <= st.proportion[k].second);
}

TEST_CASE("shifted ensemble reduces to the central one at T0 = 0") {
  ZeroCache cache;
  const EnsembleStats a = ensemble_stats(13, 0.5, {}, cache);
  const EnsembleStats b = shifted_ensemble_stats(13, 0.0, 0.5, {}, cache);
  CHECK(a.mean_tilde_s == b.mean_tilde_s);
  CHECK(a.mean_square_tilde_s == b.mean_square_tilde_s);
}

TEST_CASE("oscillation ratios are fractions") {
  const OscillationReport r = oscillation_report(0.0, 0.5, {101});
  REQUIRE(r.rows.size() == 1);
  CHECK(r.rows[0].verbatim_ratio == doctest::Approx(1.0));
  CHECK(r.rows[0].u_dependent_ratio == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.rows[0].direct_ratio == doctest::Approx(1.0).epsilon(1e-8));
  const OscillationReport s = oscillation_report(3.0, 0.5, {101, 211});
  for (const auto& row : s.rows) {
    CHECK(row.u_dependent_ratio >= 0.0);
    CHECK(row.u_dependent_ratio <= 1.0);
    CHECK(row.direct_ratio <= 1.0 + 1e-9);
  }
}

TEST_CASE("fits dominate their data") {
  const MeanSquareFit f = mean_square_fit({31}, {0.8}, {0.3});
  for (const auto& r : f.rows) {
    const double pred = f.fit.envelope_scale *
                        (f.fit.coefficients[0] * r.shape_1 + f.fit.coefficients[1] * r.shape_2);
    CHECK(r.value - r.main <= pred + 1e-12);
  }
  const PrimeMeanEnvelope e = prime_mean_envelope({31, 101}, ExtremalParams{1.0, 0.0, 0.5, Sign::plus});
  for (double x : e.ratios) CHECK(x <= e.constant);
}
