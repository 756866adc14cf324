#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dlarg/characters.hpp"
#include "dlarg/extremal.hpp"
#include "dlarg/fit.hpp"
#include "dlarg/zero_cache.hpp"

namespace dlarg {

// Coefficient of the prime sum: zero side = main + gamma - kPrimeSumFactor * sum_n [...].
inline constexpr double kPrimeSumFactor = 0.15915494309189535;  // 1/(2 pi)

struct ExplicitFormulaReport {
  std::uint32_t q = 0;
  std::uint32_t j = 0;
  ExtremalParams params;
  double zero_side = 0.0;    // sum over |gamma| <= H plus the smooth zero density beyond H
  double zeros_sum = 0.0;    // the finite sum alone
  double density_tail = 0.0; // (1/2pi) \int_{|u|>H} f(u) (log(q/pi) + Re psi) du
  double main_term = 0.0;
  double gamma_term = 0.0;
  double prime_term = 0.0;
  double residual = 0.0;
  double truncation_height = 0.0;
  double tail_bound = 0.0;        // bound on the zero-side truncation error
  double quadrature_error = 0.0;  // accumulated estimates from the numerical pieces
  std::size_t zeros_used = 0;
  bool flagged = false;           // |residual| > tail_bound + quadrature_error
};

// Both sides of the explicit formula for f = R^{+-}. Zeros must cover truncation_height.
ExplicitFormulaReport explicit_formula_check(const DirichletCharacter& chi,
                                             const ExtremalParams& p, double truncation_height,
                                             const ZeroSet& zeros);
ExplicitFormulaReport explicit_formula_check(const DirichletCharacter& chi,
                                             const ExtremalParams& p, double truncation_height,
                                             const ZeroCache& cache);

// Prime-power data n <= e^{2 pi delta} with a_n = R^(log n / 2 pi) Lambda(n) / sqrt n.
struct PrimeSumTerms {
  std::vector<std::uint64_t> n;
  std::vector<cplx> a;
};
PrimeSumTerms prime_sum_terms(const ExtremalParams& p);

// P(chi) = sum_n Re(chi(n) a_n) for one character.
double prime_sum(const DirichletCharacter& chi, const PrimeSumTerms& terms);

// (1/(q-2)) sum_{chi != chi0} P(chi), via the orthogonality relation.
double prime_sum_mean(std::uint32_t q, const ExtremalParams& p);
double prime_sum_mean(std::uint32_t q, const PrimeSumTerms& terms);
// Same average by looping over the characters.
double prime_sum_mean_direct(std::uint32_t q, const PrimeSumTerms& terms);

struct PrimeSumSquare {
  double expanded = 0.0;       // exact congruence-pair expansion
  double direct = 0.0;         // character loop (NaN when skipped)
  double inverse_pairs = 0.0;  // (1/2) sum_{n1 n2 = 1 mod q} Re(a1 a2)
  double equal_pairs = 0.0;    // (1/2) sum_{n1 = n2 mod q} Re(a1 conj a2)
  double correction = 0.0;     // expanded - (q-1)/(q-2) (inverse_pairs + equal_pairs)
};

// (1/(q-2)) sum_{chi != chi0} P(chi)^2. The direct loop runs when q <= direct_limit.
PrimeSumSquare prime_sum_mean_square(std::uint32_t q, const ExtremalParams& p,
                                     std::uint32_t direct_limit = 200);
PrimeSumSquare prime_sum_mean_square(std::uint32_t q, const PrimeSumTerms& terms,
                                     std::uint32_t direct_limit = 200);

struct EnsembleStats {
  std::uint32_t q = 0;
  double T = 0.0;          // height (ensemble) or half length h (shifted)
  double T0 = 0.0;         // 0 for the central ensemble
  std::size_t characters = 0;
  double mean_tilde_s = 0.0;
  double mean_square_tilde_s = 0.0;
  double lowest_zero_min = 0.0;  // normalised by log q / 2 pi
  double lowest_zero_max = 0.0;
  double central_order_mean = 0.0;
  std::vector<std::pair<double, double>> proportion;  // (beta, fraction), beta ascending
  double mean_count = 0.0;        // average N over characters
  double mean_gamma_term = 0.0;   // average (1/2pi) \int Re psi
  double count_identity_residual = 0.0;  // max over chi |N - formula|
  std::vector<double> tilde_s;           // per character, j = 1..q-2
  std::vector<double> lowest_zero;       // normalised, per character
};

const std::vector<double>& default_betas();

// extend = true grows the zero cache as needed; otherwise a shortfall is a CacheMissError.
EnsembleStats ensemble_stats(std::uint32_t q, double T, const std::vector<double>& betas,
                             ZeroCache& cache, bool extend = true);
EnsembleStats shifted_ensemble_stats(std::uint32_t q, double T0, double h,
                                     const std::vector<double>& betas, ZeroCache& cache,
                                     bool extend = true);

struct OscillationRow {
  std::uint32_t q = 0;
  double delta = 0.0;
  double verbatim_ratio = 0.0;     // cos(2 pi T0 delta)^2, constant in u as displayed
  double u_dependent_ratio = 0.0;  // \int u cos(2 pi T0 delta u)^2 R^2 / \int u R^2
  double direct_ratio = 0.0;       // \int u (Re R^_shifted)^2 / \int u |R^_shifted|^2 at delta_q
};
struct OscillationReport {
  double T0 = 0.0;
  double beta = 0.0;
  std::vector<OscillationRow> rows;
  double verbatim_mean = 0.0;
  double u_dependent_mean = 0.0;
};
OscillationReport oscillation_report(double T0, double beta, const std::vector<std::uint32_t>& qs);

// Envelope constants for the prime-sum averages.
struct PrimeMeanEnvelope {
  std::vector<std::uint32_t> qs;
  std::vector<double> values;
  std::vector<double> ratios;  // |value| / (e^{pi delta} / (q delta))
  double constant = 0.0;
};
PrimeMeanEnvelope prime_mean_envelope(const std::vector<std::uint32_t>& qs, const ExtremalParams& p);

struct MeanSquareFitRow {
  std::uint32_t q;
  double delta, T;
  Sign sign;
  double value, main, shape_1, shape_2;
};
struct MeanSquareFit {
  std::vector<MeanSquareFitRow> rows;
  EnvelopeFit fit;  // value - main ~ C1 shape_1 + C2 shape_2
};
// value <= ceil(e^{2 pi delta}/q) (2 pi^2 I + C1 min{1, T^2 + delta^-2}) + C2 e^{2 pi delta}/(q sqrt delta)
MeanSquareFit mean_square_fit(const std::vector<std::uint32_t>& qs,
                              const std::vector<double>& deltas, const std::vector<double>& Ts);

}  // namespace dlarg
